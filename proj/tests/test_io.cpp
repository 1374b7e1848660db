#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "weil/io.hpp"

using namespace weil;

namespace {

const std::filesystem::path data_dir{WEIL_DATA_DIR};
const std::filesystem::path golden_dir{WEIL_GOLDEN_DIR};

}  // namespace

TEST_CASE("rationals round trip through JSON") {
  CHECK(rational_from_json(Json(3)) == Rational(3));
  CHECK(rational_from_json(Json(-2)) == Rational(-2));
  CHECK(rational_from_json(Json("-3/6")) == Rational(-1, 2));
  CHECK(rational_to_json(parse_rational("4/6")) == Json("2/3"));
  CHECK(rational_to_json(Rational(5)) == Json("5"));
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json::array()), ParseError);
}

TEST_CASE("shipped algebra files load") {
  CHECK(algebra_from_json(read_json_file(data_dir / "algebras/dual.json"))->dim() == 2);
  CHECK(algebra_from_json(read_json_file(data_dir / "algebras/jet12.json"))->dim() == 3);
  CHECK(algebra_from_json(read_json_file(data_dir / "algebras/jet22.json"))->dim() == 6);
  const auto q = algebra_from_json(read_json_file(data_dir / "algebras/quotient.json"));
  CHECK(q->dim() == 4);
  CHECK(q->height() == 2);
  const auto t = algebra_from_json(read_json_file(data_dir / "algebras/dual_table.json"));
  CHECK(t->dim() == 2);
  CHECK(t->height() == 1);
  CHECK_THROWS_AS(algebra_from_json(read_json_file(data_dir / "algebras/r_times_r.json")), ValidationError);
}

TEST_CASE("algebra JSON round trip and info") {
  for (const auto& a : {WeilAlgebra::jet(1, 1), WeilAlgebra::jet(2, 2), WeilAlgebra::jet(1, 3)}) {
    const auto back = algebra_from_json(algebra_to_json(*a));
    CHECK(back->dim() == a->dim());
    CHECK(back->height() == a->height());
    CHECK(back->table() == a->table());
    CHECK(back->labels() == a->labels());
  }
  const Json info = algebra_info(*WeilAlgebra::jet(1, 2));
  CHECK(info["dim"] == 3);
  CHECK(info["height"] == 2);
  CHECK(info["valid"] == true);
  CHECK(info["basis"] == Json::array({"1", "e1", "e1^2"}));
}

TEST_CASE("malformed algebra specs") {
  CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"kind":"nope"})")), ParseError);
  CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"generators":1})")), ParseError);
  CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"kind":"jet","generators":-1,"order":1})")), ParseError);
  CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"kind":"table","basis":["1"],"table":3,"aug":["1"]})")),
                  ParseError);
  CHECK_THROWS_AS(algebra_from_json(Json::parse("[1,2]")), ParseError);
  CHECK_THROWS(algebra_from_json(
      Json::parse(R"({"kind":"monomial_quotient","vars":["a"],"relations":["a+1"]})")));
}

TEST_CASE("structure files load") {
  CHECK(structure_from_json(read_json_file(data_dir / "structures/symplectic2.json")).nvars() == 2);
  CHECK(structure_from_json(read_json_file(data_dir / "structures/symplectic4.json")).nvars() == 4);
  const auto so3 = structure_from_json(read_json_file(data_dir / "structures/so3.json"));
  const auto m = structure_from_json(read_json_file(data_dir / "structures/so3_matrix.json"));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(so3(i, j) == m(i, j));
  CHECK(structure_from_json(read_json_file(data_dir / "structures/zero2.json")).homogeneity() ==
        Homogeneity::constant);
  CHECK(structure_from_json(read_json_file(data_dir / "structures/inhomogeneous.json")).homogeneity() ==
        Homogeneity::inhomogeneous);
  CHECK_THROWS_AS(structure_from_json(read_json_file(data_dir / "structures/not_poisson.json")), ValidationError);
  CHECK_NOTHROW(structure_from_json(read_json_file(data_dir / "structures/not_poisson.json"),
                                    PoissonStructure::Jacobi::waive));
}

TEST_CASE("structure JSON round trip and errors") {
  const auto so3 = PoissonStructure::so3();
  const auto back = structure_from_json(structure_to_json(so3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(so3(i, j) == back(i, j));
  CHECK_THROWS_AS(structure_from_json(Json::parse(R"({"kind":"matrix","n":2,"entries":{"1":"x"}})")), ParseError);
  CHECK_THROWS_AS(structure_from_json(Json::parse(R"({"kind":"matrix","n":2,"entries":{"1,1":"x"}})")), ParseError);
  CHECK_THROWS_AS(structure_from_json(Json::parse(R"({"kind":"matrix","n":2,"entries":{"1,3":"x"}})")), ParseError);
  CHECK_THROWS_AS(structure_from_json(Json::parse(R"({"kind":"matrix","n":2,"entries":{"1,2":"x","2,1":"y"}})")),
                  ParseError);
  CHECK_NOTHROW(structure_from_json(Json::parse(R"({"kind":"matrix","n":2,"entries":{"1,2":"x","2,1":"-x"}})")));
  CHECK_THROWS_AS(structure_from_json(Json::parse(R"({"kind":"matrix","n":2,"entries":{"1,2":3}})")), ParseError);
  CHECK_THROWS_AS(structure_from_json(Json::parse(R"({"kind":"klein"})")), ParseError);
  CHECK_THROWS(structure_from_json(Json::parse(R"({"kind":"symplectic","n":3})")));
}

TEST_CASE("cochain files load and round trip") {
  const auto b1 = base_cochain_from_json(read_json_file(data_dir / "cochains/base_p1.json"), 2);
  CHECK(b1.degree() == 1);
  CHECK(to_string(b1) == "{[1] x1^2*x2; [2] -x2+x1}");
  const auto back = base_cochain_from_json(cochain_to_json(b1), 2);
  CHECK(back == b1);
  const auto b0 = base_cochain_from_json(read_json_file(data_dir / "cochains/base_p0.json"), 2);
  CHECK(b0.degree() == 0);

  const auto dual = WeilAlgebra::jet(1, 1);
  const Json wj = read_json_file(data_dir / "cochains/weil_p1.json");
  CHECK(cochain_kind(wj) == ComplexKind::weil);
  const auto w = a_cochain_from_json(wj, 2, dual);
  CHECK(w.kind() == ComplexKind::weil);
  CHECK(a_cochain_from_json(cochain_to_json(w), 2, dual) == w);
  const auto lifted = a_cochain_from_json(read_json_file(data_dir / "cochains/base_p1.json"), 2, dual);
  CHECK(lifted.kind() == ComplexKind::mixed);
}

TEST_CASE("malformed cochains") {
  auto base = [](const char* text) { return base_cochain_from_json(Json::parse(text), 3); };
  CHECK_THROWS_AS(base(R"({"complex":"base","p":2,"coeffs":{"2,1":"x"}})"), ParseError);
  CHECK_THROWS_AS(base(R"({"complex":"base","p":2,"coeffs":{"1,1":"x"}})"), ParseError);
  CHECK_THROWS_AS(base(R"({"complex":"base","p":2,"coeffs":{"1,4":"x"}})"), ParseError);
  CHECK_THROWS_AS(base(R"({"complex":"base","p":2,"coeffs":{"1":"x"}})"), ParseError);
  CHECK_THROWS_AS(base(R"({"complex":"base","p":1,"coeffs":{"a":"x"}})"), ParseError);
  CHECK_THROWS_AS(base(R"({"complex":"base","p":1,"coeffs":{"1":7}})"), ParseError);
  CHECK_THROWS_AS(base(R"({"complex":"base","p":1,"coeffs":[]})"), ParseError);
  CHECK_THROWS_AS(base(R"({"complex":"weird","p":1,"coeffs":{}})"), ParseError);
  CHECK_THROWS_AS(base(R"({"complex":"weil","p":1,"coeffs":{}})"), ParseError);
  CHECK_THROWS_AS(base(R"({"complex":"base","coeffs":{}})"), ParseError);
}

TEST_CASE("files") {
  CHECK_THROWS_AS(read_json_file(data_dir / "does_not_exist.json"), ParseError);
  const auto tmp = std::filesystem::temp_directory_path() / "weil_io_test_bad.json";
  write_text_file(tmp, "{not json");
  CHECK_THROWS_AS(read_json_file(tmp), ParseError);
  write_text_file(tmp, dump(Json{{"a", 1}}));
  CHECK(read_json_file(tmp)["a"] == 1);
  std::filesystem::remove(tmp);
  CHECK(dump(Json::array()) == "[]\n");
}

TEST_CASE("reports") {
  const auto so3 = PoissonStructure::so3();
  const auto rep = betti(ComplexKind::base, so3, nullptr, 0, 3, 1);
  const Json j = report_to_json(rep, 5);
  CHECK(j["complex"] == "base");
  CHECK(j["cochains"] == "multiderivation");
  CHECK(j["certified"] == true);
  CHECK(j["seed"] == 5);
  REQUIRE(j["table"].size() == 4);
  CHECK(j["table"][3]["H"] == 1);
  CHECK(j["table"][3]["boundaries"] == 3);
  CHECK_FALSE(j["table"][0].contains("A_rank"));
  CHECK(report_to_json(rep)["seed"].is_null());
  const std::string text = report_to_text(rep);
  CHECK(text.find("p\tdim\trank\tker\tB\tH\n") != std::string::npos);
  CHECK(text.find("3\t4\t0\t4\t3\t1\n") != std::string::npos);
  CHECK(text.find("H^0 representative:") != std::string::npos);

  const auto lifted = betti(ComplexKind::weil, PoissonStructure::symplectic(2), WeilAlgebra::jet(1, 1), 0, 2, 1);
  const Json lj = report_to_json(lifted);
  CHECK(lj["table"][0]["A_rank"] == 1);
  CHECK(lj["table"][0]["H"] == 2);

  std::map<std::pair<std::size_t, std::size_t>, Poly> inh{{{1, 2}, parse_poly("1+x^2", 2)}};
  const auto bad = betti(ComplexKind::base, PoissonStructure::from_entries(2, inh), nullptr, 0, 2, 1);
  const Json bj = report_to_json(bad);
  CHECK(bj["certified"] == false);
  CHECK(bj.contains("note"));
  CHECK(bj["table"][0]["H"].is_null());
  CHECK(report_to_text(bad).find("note: ") != std::string::npos);
}

TEST_CASE("golden comparison") {
  const auto rep = betti(ComplexKind::base, PoissonStructure::so3(), nullptr, 0, 3, 1);
  const std::string text = dump(report_to_json(rep));
  const auto ok = compare_golden(text, golden_dir / "so3_base_D1.json");
  CHECK(ok.equal);
  std::string changed = text;
  changed.replace(changed.find("\"H\": 1"), 6, "\"H\": 2");
  const auto bad = compare_golden(changed, golden_dir / "so3_base_D1.json");
  CHECK_FALSE(bad.equal);
  CHECK(bad.line > 1);
  CHECK(bad.expected != bad.actual);
  CHECK_THROWS_AS(compare_golden(text, golden_dir / "missing.json"), ParseError);
}
