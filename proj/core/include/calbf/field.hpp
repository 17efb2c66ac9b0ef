#pragma once

#include "calbf/lie.hpp"

#include <array>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

namespace calbf {

using Rng = std::mt19937_64;

enum Axis : int { AX = 0, AY = 1, AS = 2, AT = 3 };

// Uniform grid on up to four periodic axes (x, y, s, theta), coordinates j/n.
// Axes in `form` carry differential-form indices; theta outside `form` is a
// loop parameter.  With degree d != 0 the x-direction is glued with a shift,
// (x+1, y, theta) ~ (x, y, theta + d*y), so d/dx uses finite differences with
// twisted ghost cells.  That needs n_theta to be a multiple of n_y.
struct Space {
	std::array<int, 4> n{1, 1, 1, 1};
	int degree = 0;
	unsigned form = 0;

	static Space bundle(int nx, int ny, int nt, int d);
	static Space base(int nx, int ny, int nt, int d);
	static Space base3(int nx, int ny, int ns, int nt, int d);

	long npts() const { return long(n[0]) * n[1] * n[2] * n[3]; }
	long stride(int axis) const;
	bool has(int axis) const { return (form >> axis) & 1u; }
	int form_dim() const;
	int ncomp(int p) const;
	const std::vector<unsigned> &components(int p) const;
	int index_of(unsigned mask) const;
	unsigned top() const { return form; }
	long theta_shift(int iy) const; // theta-index shift picked up crossing x = 1
	void validate() const;

	bool operator==(const Space &o) const { return n == o.n && degree == o.degree && form == o.form; }
	bool operator!=(const Space &o) const { return !(*this == o); }
};

std::string component_name(unsigned mask);

// p-form with nch real channels per component, layout v[(comp*nch + ch)*npts + pt],
// points ordered x-major with theta fastest.
struct Field {
	Space sp;
	int p = 0;
	int nch = 1;
	std::vector<double> v;

	Field() = default;
	Field(const Space &s, int p_, int nch_);

	int ncomp() const { return sp.ncomp(p); }
	long npts() const { return sp.npts(); }
	double *ptr(int comp, int ch) { return v.data() + (long(comp) * nch + ch) * npts(); }
	const double *ptr(int comp, int ch) const { return v.data() + (long(comp) * nch + ch) * npts(); }

	Field &operator+=(const Field &o);
	Field &operator-=(const Field &o);
	Field &operator*=(double s);
};

Field operator+(Field a, const Field &b);
Field operator-(Field a, const Field &b);
Field operator*(double s, Field a);

void require_same(const Field &a, const Field &b);
// max over points and components of the Euclidean norm across channels
double sup_norm(const Field &f);
double sup_diff(const Field &a, const Field &b);
double rms(const Field &f);

Field coordinate(const Space &sp, int axis); // 0-form with value x_axis in [0,1)
Field constant(const Space &sp, double c);

// componentwise coordinate derivative (frame mixing applied at twisted ghosts)
Field partial(const Field &f, int axis);
Field exterior_d(const Field &f);

Field wedge(const Field &a, const Field &b);                                // real a (nch 1) with any b
Field wedge_bracket(const LieAlgebra &g, const Field &a, const Field &b);  // [a ^ b]
Field wedge_pair(const LieAlgebra &g, const Field &a, const Field &b);     // <a ^ b>
Field pointwise_pair(const LieAlgebra &g, const Field &a, const Field &b); // 0-form channels summed

Field contract_R(const Field &w);
Field project_horizontal(const Field &w, const Field &kappa);
Field fiber_average(const Field &w);
double fiber_integrate(const Field &top);
Field top_coefficient(const Field &top);
Field restrict_components(const Field &f, const Space &target, int p);
Field select_channel_block(const Field &f, int ch0, int nch);
// same grid, different form axes: shared components copied, the rest zero
Field embed_components(const Field &f, const Space &target);
// the same samples read on another space with the same grid (0-forms only)
Field reinterpret(const Field &f, const Space &target);

Field make_kappa(const Space &bundle);
Field from_kappa_frame(const Field &w);
Field to_kappa_frame(const Field &w);

// Random smooth fields.  For d != 0 each component is a twisted scalar
// sum_j G(x + j - 1/2) P(x, y, s, theta - d j y) with P a trig polynomial
// (by default constant in x, so all x-dependence comes from the envelope);
// on the bundle they are read as coefficients in the (dx, dy, kappa) frame.
struct FieldGen {
	int modes = 1;
	int x_modes = -1; // -1: `modes` on untwisted grids, 0 on twisted ones
	double amplitude = 0.5;
	double width = 0.6;
	int images = 4;
	bool theta_const = false;
	bool zero_mean = false;
};

Field random_field(const Space &sp, int p, int nch, Rng &rng, const FieldGen &g = {});
void band_limit(Field &f, int axis, int mmax);
double band_excess(const Field &f, int axis, int mmax);

// SU(n)-valued 0-forms: 2 n^2 channels, entry (i,k) real/imag in 2(i n + k) + {0,1}
Field group_exp(const LieAlgebra &g, const Field &xi);
Field group_identity(const Space &sp, int n);
Mat group_at(const Field &g, long pt);
void set_group_at(Field &g, long pt, const Mat &m);
int group_rank(const Field &g);

// serialization; component order is the lexicographic order of Space::components
void write_field_json(std::ostream &os, const Field &f);
Field read_field_json(std::istream &is);
void write_field_binary(std::ostream &os, const Field &f);
Field read_field_binary(std::istream &is);

} // namespace calbf
