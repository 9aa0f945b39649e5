#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "scherk/cli.hpp"
#include "scherk/export.hpp"
#include "scherk/harmonic_map.hpp"
#include "support.hpp"

using namespace scherk;
using namespace scherk::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "scherk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string num(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

std::filesystem::path temp(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

std::vector<std::string> lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

struct Vertex {
  double x, y, z;
};

std::vector<Vertex> mesh_vertices(const std::vector<std::string>& text) {
  std::vector<Vertex> v;
  for (const auto& l : text) {
    if (l.rfind("v ", 0) != 0) continue;
    std::istringstream s(l.substr(2));
    Vertex p{};
    s >> p.x >> p.y >> p.z;
    v.push_back(p);
  }
  return v;
}

}  // namespace

TEST_CASE("derive") {
  const Run sq = run({"derive", "--p", "1.5707963", "--q", "3.1415926", "--json"});
  REQUIRE(sq.code == 0);
  const auto j = nlohmann::json::parse(sq.out);
  CHECK(std::hypot(j["a"]["re"].get<double>(), j["a"]["im"].get<double>()) < 1e-6);
  CHECK(std::abs(j["beta"].get<double>() - kPi / 4) < 1e-6);
  CHECK(std::abs(j["alpha"].get<double>() - kPi / 2) < 1e-6);

  const Run fig = run({"derive", "--p", "1.6707963", "--q", "3.0415926", "--json"});
  REQUIRE(fig.code == 0);
  CHECK(nlohmann::json::parse(fig.out)["case"] == "A");

  const Run text = run({"derive", "--p", "1.6707963", "--q", "3.0415926"});
  CHECK(text.code == 0);
  CHECK(text.out.find("case   A") != std::string::npos);

  const Run outside = run({"derive", "--p", "0.05", "--q", "0.10"});
  CHECK(outside.code == 2);
  CHECK(outside.err.find("outside region R") != std::string::npos);

  const Run deg = run({"derive", "--p", "90", "--q", "180", "--deg", "--json"});
  REQUIRE(deg.code == 0);
  CHECK(nlohmann::json::parse(deg.out)["case"] == "Center");

  CHECK(run({"derive", "--p", "1.0"}).code == 2);
  CHECK(run({"derive", "--p", "2.0", "--q", "1.0"}).code == 2);
}

TEST_CASE("JSON report keys are always present") {
  const char* keys[] = {"p", "q",     "beta",  "alpha", "a",           "b",   "theta",
                        "z_zero", "K", "K_cross", "re_za", "bound_margin", "case"};
  for (const auto& prm : {kSquare, kTilted, kThirds, kCaseB, kCaseC, kCaseD}) {
    for (const char* cmd : {"derive", "curvature"}) {
      const Run r = run({cmd, "--p", num(prm.p), "--q", num(prm.q), "--json"});
      REQUIRE(r.code == 0);
      const auto j = nlohmann::json::parse(r.out);
      for (const char* k : keys) CHECK(j.contains(k));
      CHECK(j["z_zero"].contains("re"));
      CHECK(j["z_zero"].contains("im"));
    }
  }
}

TEST_CASE("curvature command") {
  const Run sq = run({"curvature", "--p", num(kSquare.p), "--q", num(kSquare.q)});
  CHECK(sq.code == 0);
  CHECK(sq.out.find("K             -4.93480220054") != std::string::npos);

  const Run fig = run({"curvature", "--p", num(kTilted.p), "--q", num(kTilted.q), "--json"});
  REQUIRE(fig.code == 0);
  const auto j = nlohmann::json::parse(fig.out);
  CHECK(j["bound_margin"].get<double>() > 0);
  CHECK(j["re_za"].get<double>() < 0);

  const Run th = run({"curvature", "--p", num(kThirds.p), "--q", num(kThirds.q)});
  CHECK(th.code == 0);
  auto field = [&](const std::string& key) {
    const auto at = th.out.find(key + " ");
    return th.out.substr(at + 14, th.out.find('\n', at) - at - 14);
  };
  CHECK(field("K") == field("K_cross"));

  // K sees theta only through |q| and |q'|, which a rotation keeps.
  const Run rotated =
      run({"curvature", "--p", num(kTilted.p), "--q", num(kTilted.q), "--theta-offset", "0.4"});
  CHECK(rotated.code == 0);
  CHECK(rotated.out.find("K             -3.92761484676") != std::string::npos);
}

TEST_CASE("verify command") {
  CHECK(run({"verify", "--p", num(kSquare.p), "--q", num(kSquare.q)}).code == 0);
  const Run fig = run({"verify", "--p", num(kTilted.p), "--q", num(kTilted.q)});
  CHECK(fig.code == 0);
  CHECK(fig.out.find("FAIL") == std::string::npos);

  const Run neg = run(
      {"verify", "--p", num(kTilted.p), "--q", num(kTilted.q), "--theta-offset", "0.25"});
  CHECK(neg.code == 1);
  CHECK(neg.out.find("FAIL harmonic.beltrami") != std::string::npos);

  const Run sweep = run({"verify", "--sweep", "--psteps", "16", "--qsteps", "16"});
  CHECK(sweep.code == 0);
  CHECK(sweep.out.find("PASS sweep.violations") != std::string::npos);

  CHECK(run({"verify"}).code == 2);
}

TEST_CASE("sweep command") {
  const auto path = temp("scherk_cli_sweep.csv");
  const Run r = run({"sweep", "--psteps", "16", "--qsteps", "16", "--out", path.string()});
  CHECK(r.code == 0);
  const auto text = lines(path);
  REQUIRE(!text.empty());
  CHECK(text[0] == "p,q,beta,alpha,re_zzero,im_zzero,re_a,im_a,absK,bound_margin,re_za,case");
  CHECK(text.size() == 50);  // header + 49 nodes in R
  const Run piped = run({"sweep", "--psteps", "16", "--qsteps", "16"});
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(piped.out == buf.str());
  std::filesystem::remove(path);

  CHECK(run({"sweep", "--psteps", "4"}).code == 2);
  CHECK(run({"sweep", "--psteps", "8", "--qsteps", "8", "--no-filter"}).code == 1);
}

TEST_CASE("mesh writer") {
  const auto small = temp("scherk_small.obj");
  REQUIRE(run({"mesh", "--p", "1", "--q", "2", "--nr", "2", "--nt", "3", "--out",
               small.string()})
              .code == 0);
  const auto text = lines(small);
  int v = 0, f = 0;
  for (const auto& l : text) {
    v += l.rfind("v ", 0) == 0;
    f += l.rfind("f ", 0) == 0;
  }
  CHECK(v == 6);
  CHECK(f == 6);
  CHECK(text[6] == "f 1 4 5");
  std::filesystem::remove(small);

  // Formatting: 9 significant digits, LF only.
  std::ostringstream out;
  write_mesh(make_region_surface(kTilted), {2, 3, 0.5}, out);
  CHECK(out.str().find('\r') == std::string::npos);
  const std::string first = out.str().substr(0, out.str().find('\n'));
  const cplx f0 = f_zero(derive_geometry(kTilted));
  char expect[128];
  std::snprintf(expect, sizeof expect, "v %.9g %.9g 0", f0.real(), f0.imag());
  CHECK(first == expect);

  CHECK(run({"mesh", "--p", "1", "--q", "2", "--nr", "1", "--out", small.string()}).code == 2);
  CHECK(run({"mesh", "--p", "1", "--q", "2", "--nt", "2", "--out", small.string()}).code == 2);
  CHECK(run({"mesh", "--p", "1", "--q", "2", "--rmax", "1", "--out", small.string()}).code == 2);
  const Run io = run({"mesh", "--p", "1", "--q", "2", "--out", "/nonexistent-dir/m.obj"});
  CHECK(io.code != 0);
  CHECK(io.err.find("/nonexistent-dir/m.obj") != std::string::npos);
}

TEST_CASE("tilted mesh is finite and inside the disk") {
  const auto path = temp("scherk_fig.obj");
  REQUIRE(run({"mesh", "--p", num(kTilted.p), "--q", num(kTilted.q), "--out", path.string()})
              .code == 0);
  const auto text = lines(path);
  const auto verts = mesh_vertices(text);
  CHECK(verts.size() == 64 * 128);
  CHECK(text.size() == 64 * 128 + 63 * 128 * 2);
  for (const auto& p : verts) {
    CHECK(std::isfinite(p.z));
    CHECK(std::hypot(p.x, p.y) < 1.0);
  }
  std::filesystem::remove(path);
}

TEST_CASE("square mesh has the quarter-turn symmetry") {
  std::ostringstream out;
  write_mesh(make_region_surface(kSquare), {64, 128, 0.995}, out);
  std::istringstream in(out.str());
  std::vector<std::string> text;
  for (std::string l; std::getline(in, l);) text.push_back(l);
  const auto verts = mesh_vertices(text);
  // Vertex (j, k) maps to (j, k + n_t/4) under (u, v, T) -> (-v, u, -T).
  for (int j = 0; j < 64; ++j) {
    for (int k = 0; k < 128; ++k) {
      const Vertex& a = verts[j * 128 + k];
      const Vertex& b = verts[j * 128 + (k + 32) % 128];
      CHECK(std::abs(-a.y - b.x) < 1e-6);
      CHECK(std::abs(a.x - b.y) < 1e-6);
      CHECK(std::abs(-a.z - b.z) < 1e-6);
    }
  }
}

TEST_CASE("quadrilateral CSV") {
  auto read = [](const ScherkParams& prm) {
    std::ostringstream out;
    write_quad_csv(make_region_surface(prm), out);
    std::map<std::string, std::vector<cplx>> series;
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "series,index,x,y");
    while (std::getline(in, line)) {
      std::istringstream row(line);
      std::string name, idx, x, y;
      std::getline(row, name, ',');
      std::getline(row, idx, ',');
      std::getline(row, x, ',');
      std::getline(row, y, ',');
      series[name].push_back({std::stod(x), std::stod(y)});
    }
    return series;
  };

  const auto sq = read(kSquare);
  const cplx corners[5] = {{0, 1}, {-1, 0}, {0, -1}, {1, 0}, {0, 1}};
  REQUIRE(sq.at("vertex").size() == 5);
  for (int k = 0; k < 5; ++k) CHECK(std::abs(sq.at("vertex")[k] - corners[k]) < 1e-15);

  const auto fig = read(kTilted);
  const QuadGeometry g = derive_geometry(kTilted);
  const double angles[4] = {kTilted.p, g.x, g.y, g.s};
  for (int k = 0; k < 4; ++k) {
    CHECK(std::abs(std::remainder(std::arg(fig.at("vertex")[k]) - angles[k], kTwoPi)) < 1e-14);
  }
  CHECK(fig.at("circle").size() == 256);
  for (cplx c : fig.at("circle")) CHECK(std::abs(std::abs(c) - 1) < 1e-15);

  for (const auto& prm : {kSquare, kTilted, kCaseB, kCaseC, kCaseD}) {
    const auto s = read(prm);
    const cplx f0 = f_zero(derive_geometry(prm));
    int curves = 0;
    for (const auto& [name, pts] : s) {
      if (name.rfind("ray_", 0) != 0) continue;
      ++curves;
      CHECK(pts.size() == 64);
      CHECK(std::abs(pts.front() - f0) < 1e-15);
      for (cplx w : pts) CHECK(std::abs(w) < 1.0);
    }
    CHECK(curves == 4);
  }
}
