#include <doctest.h>

#include <filesystem>

#include "hcurve/error.hpp"
#include "hcurve/geodesics.hpp"
#include "hcurve/io.hpp"
#include "support.hpp"

using namespace hcurve;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::invalid_argument;
}

}  // namespace

TEST_CASE("numbers round-trip") {
  CHECK(io::format_double(0.1) == "0.1");
  CHECK(io::format_double(-2.0) == "-2");
  CHECK(io::format_double(1e-300) == "1e-300");
  auto g = testing::rng(103);
  for (int i = 0; i < 1000; ++i) {
    const double v = testing::uniform(g, -1e3, 1e3) * std::pow(10.0, testing::uniform(g, -20, 20));
    CHECK(std::stod(io::format_double(v)) == v);
  }
}

TEST_CASE("curve JSON") {
  auto g = testing::rng(107);
  auto spec = GeodesicSpec::canonical(2, 0.7);
  spec.x0 << 0.1, -0.2;
  const SampledCurve c = geodesic_curve(spec, uniform_grid(0.0, 1.0, 33));
  const SampledCurve back = io::curve_from_json(io::curve_to_json(c));
  CHECK(back.n() == 2);
  CHECK(back.is_arclength());
  CHECK(back.params() == c.params());
  CHECK(back.coords() == c.coords());
  CHECK(io::curve_to_json(back) == io::curve_to_json(c));

  const std::string minimal =
      R"({"n":1,"params":[0,1,2,3,4,5,6,7,8],"points":[[0,0,0],[1,0,0],[2,0,0],[3,0,0],[4,0,0],[5,0,0],[6,0,0],[7,0,0],[8,0,0]]})";
  CHECK_FALSE(io::curve_from_json(minimal).is_arclength());

  CHECK(kind_of([] { io::curve_from_json("{not json"); }) == ErrorKind::parse);
  CHECK(kind_of([] { io::curve_from_json(R"({"n":1,"params":[0,1]})"); }) == ErrorKind::parse);
  CHECK(kind_of([] { io::curve_from_json(R"({"n":"one","params":[],"points":[]})"); }) == ErrorKind::parse);
  CHECK(kind_of([] { io::curve_from_json(R"({"n":1,"params":[0,1],"points":[[0,0,0]]})"); }) == ErrorKind::parse);
  CHECK(kind_of([] { io::curve_from_json(R"({"n":1,"params":[0],"points":[[0,0]]})"); }) == ErrorKind::parse);
  // well-formed but too short for a curve
  CHECK(kind_of([] { io::curve_from_json(R"({"n":1,"params":[0,1],"points":[[0,0,0],[1,0,0]]})"); }) ==
        ErrorKind::invalid_argument);
}

TEST_CASE("profile CSV") {
  const InvariantProfile p = testing::profile_n3(0.05);
  const std::string text = io::profile_to_csv(p);
  CHECK(text.rfind("s,kappa_1,kappa_2,kappa_3,tau\n", 0) == 0);
  const InvariantProfile back = io::profile_from_csv(text, 3);
  CHECK(back.n == 3);
  CHECK(back.s == p.s);
  CHECK(back.kappa == p.kappa);
  CHECK(back.tau == p.tau);
  CHECK(io::profile_to_csv(back) == text);

  CHECK(io::profile_from_csv("s,kappa_1,tau\r\n0, 1.5 ,+2\r\n\n1,2,3\n").kappa[0] == std::vector<double>{1.5, 2});
  CHECK(kind_of([&] { io::profile_from_csv(text, 2); }) == ErrorKind::parse);
  CHECK(kind_of([] { io::profile_from_csv("s,k,tau\n0,1,2\n"); }) == ErrorKind::parse);
  CHECK(kind_of([] { io::profile_from_csv("s,kappa_1,tau\n0,1\n"); }) == ErrorKind::parse);
  CHECK(kind_of([] { io::profile_from_csv("s,kappa_1,tau\n0,x,2\n"); }) == ErrorKind::parse);
  CHECK(kind_of([] { io::profile_from_csv("s,kappa_1,tau\n0,1e999,2\n"); }) == ErrorKind::parse);
  CHECK(kind_of([] { io::profile_from_csv("s,kappa_1,tau\n"); }) == ErrorKind::parse);
  CHECK(kind_of([] { io::profile_from_csv(""); }) == ErrorKind::parse);
}

TEST_CASE("symmetry and report JSON") {
  auto g = testing::rng(109);
  const Symmetry phi = testing::random_symmetry(g, 2);
  const Symmetry back = io::symmetry_from_json(io::symmetry_to_json(phi));
  CHECK((back.rotation() - phi.rotation()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(back.translation() == phi.translation());
  CHECK(kind_of([] { io::symmetry_from_json(R"({"n":1,"rotation":[1,0,0],"translation":[0,0,0]})"); }) == ErrorKind::parse);

  OrderReport r;
  r.n = 2;
  r.order = 1;
  r.margins = {1.0, 0.0};
  r.totally_real = true;
  const std::string json = io::report_to_json(r);
  CHECK(json.find("\"order\": 1") != std::string::npos);
  CHECK(json.find("\"nondegenerate\": false") != std::string::npos);
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "hcurve-io-test";
  std::filesystem::create_directories(dir);
  io::write_file(dir / "a.txt", "hello\n");
  CHECK(io::read_file(dir / "a.txt") == "hello\n");
  CHECK(kind_of([&] { io::read_file(dir / "missing.txt"); }) == ErrorKind::io);
  CHECK(kind_of([&] { io::write_file(dir / "no" / "such" / "dir.txt", "x"); }) == ErrorKind::io);
  std::filesystem::remove_all(dir);
}
