#include "calbf/field.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace calbf {

namespace {

constexpr char kMagic[8] = {'C', 'A', 'L', 'B', 'F', 'F', 'L', 'D'};
constexpr std::int32_t kVersion = 1;

std::vector<std::string> axis_names(unsigned form)
{
	static const char *names[4] = {"x", "y", "s", "theta"};
	std::vector<std::string> r;
	for (int a = 0; a < 4; ++a)
		if ((form >> a) & 1u)
			r.push_back(names[a]);
	return r;
}

unsigned form_from_names(const std::vector<std::string> &v)
{
	static const char *names[4] = {"x", "y", "s", "theta"};
	unsigned f = 0;
	for (const auto &s : v) {
		int a = 0;
		while (a < 4 && s != names[a])
			++a;
		if (a == 4)
			throw std::runtime_error("unknown form axis '" + s + "'");
		f |= 1u << a;
	}
	return f;
}

void check_header(const Space &sp, int p, int nch)
{
	sp.validate();
	if (p < 0 || p > sp.form_dim() || nch < 1)
		throw std::runtime_error("bad field header");
}

} // namespace

void write_field_json(std::ostream &os, const Field &f)
{
	nlohmann::json j;
	j["format"] = "calbf-field";
	j["version"] = kVersion;
	j["degree"] = f.sp.degree;
	j["grid"] = {f.sp.n[0], f.sp.n[1], f.sp.n[2], f.sp.n[3]};
	j["form_axes"] = axis_names(f.sp.form);
	j["form_degree"] = f.p;
	j["channels"] = f.nch;
	std::vector<std::string> comps;
	for (unsigned m : f.sp.components(f.p))
		comps.push_back(component_name(m));
	j["components"] = comps;
	j["data"] = f.v;
	os << j.dump() << '\n';
}

Field read_field_json(std::istream &is)
{
	nlohmann::json j;
	is >> j;
	if (j.value("format", "") != "calbf-field" || j.value("version", 0) != kVersion)
		throw std::runtime_error("not a calbf field document");
	Space sp;
	auto g = j.at("grid").get<std::vector<int>>();
	if (g.size() != 4)
		throw std::runtime_error("grid must have four sizes");
	for (int a = 0; a < 4; ++a)
		sp.n[a] = g[a];
	sp.degree = j.at("degree").get<int>();
	sp.form = form_from_names(j.at("form_axes").get<std::vector<std::string>>());
	int p = j.at("form_degree").get<int>(), nch = j.at("channels").get<int>();
	check_header(sp, p, nch);
	Field f(sp, p, nch);
	auto comps = j.at("components").get<std::vector<std::string>>();
	const auto &want = sp.components(p);
	if (comps.size() != want.size())
		throw std::runtime_error("component count mismatch");
	for (std::size_t i = 0; i < want.size(); ++i)
		if (comps[i] != component_name(want[i]))
			throw std::runtime_error("component order mismatch at " + comps[i]);
	auto data = j.at("data").get<std::vector<double>>();
	if (data.size() != f.v.size())
		throw std::runtime_error("data size mismatch");
	f.v = std::move(data);
	return f;
}

void write_field_binary(std::ostream &os, const Field &f)
{
	std::int32_t hdr[9] = {kVersion,  f.sp.degree, f.sp.n[0], f.sp.n[1], f.sp.n[2],
	                       f.sp.n[3], std::int32_t(f.sp.form), f.p, f.nch};
	os.write(kMagic, sizeof kMagic);
	os.write(reinterpret_cast<const char *>(hdr), sizeof hdr);
	os.write(reinterpret_cast<const char *>(f.v.data()), std::streamsize(f.v.size() * sizeof(double)));
	if (!os)
		throw std::runtime_error("write failed");
}

Field read_field_binary(std::istream &is)
{
	char magic[8];
	std::int32_t hdr[9];
	is.read(magic, sizeof magic);
	if (!is || std::memcmp(magic, kMagic, sizeof magic) != 0)
		throw std::runtime_error("not a calbf binary field");
	is.read(reinterpret_cast<char *>(hdr), sizeof hdr);
	if (!is || hdr[0] != kVersion)
		throw std::runtime_error("unsupported binary field version");
	Space sp;
	sp.degree = hdr[1];
	for (int a = 0; a < 4; ++a)
		sp.n[a] = hdr[2 + a];
	sp.form = unsigned(hdr[6]) & 15u;
	check_header(sp, hdr[7], hdr[8]);
	Field f(sp, hdr[7], hdr[8]);
	is.read(reinterpret_cast<char *>(f.v.data()), std::streamsize(f.v.size() * sizeof(double)));
	if (!is)
		throw std::runtime_error("truncated binary field");
	return f;
}

} // namespace calbf
