#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kCli = LINEACT_CLI_PATH;
const std::string kGolden = LINEACT_GOLDEN_DIR;

int run(const std::string& args) {
  std::string cmd = kCli + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

}  // namespace

TEST_CASE("realize matches the committed fixture and reruns identically") {
  std::string spec = kGolden + "/z_natural.spec";
  CHECK(run("realize --spec " + spec + " --n 7 --out /tmp/lineact_z1.table") == 0);
  CHECK(run("realize --spec " + spec + " --n 7 --out /tmp/lineact_z2.table") == 0);
  CHECK(slurp("/tmp/lineact_z1.table") == slurp("/tmp/lineact_z2.table"));
  CHECK(slurp("/tmp/lineact_z1.table") == slurp(kGolden + "/z_natural.table"));
}

TEST_CASE("realize input errors exit with code 2") {
  spit("/tmp/lineact_bad.spec", "not a preorder spec\n");
  CHECK(run("realize --spec /tmp/lineact_bad.spec --n 3 --out /tmp/lineact_bad.out") == 2);
  CHECK(run("realize --spec /nonexistent/file --n 3 --out /tmp/lineact_bad.out") == 2);
  CHECK(run("realize --n 3 --out /tmp/lineact_bad.out") == 2);  // missing --spec
}

TEST_CASE("degenerate induced preorder exits with code 3") {
  // A representation whose generator fixes the basepoint induces the
  // trivial preorder, a mathematical inconsistency for realization.
  spit("/tmp/lineact_trivial.rep",
       "rep v1\ngenerators 1 a\nrelators 0\nscope none\nplmap v1\nbreakpoints 0\npiece 2 0\n");
  spit("/tmp/lineact_trivial.spec",
       "preorder v1\ngenerators a\nkind induced\nrep-file /tmp/lineact_trivial.rep\n"
       "numbering ball 5\n");
  CHECK(run("realize --spec /tmp/lineact_trivial.spec --n 5 --out /tmp/lineact_trivial.out") == 3);
}

TEST_CASE("witness searches exit 4 when inconclusive") {
  spit("/tmp/lineact_id.rep",
       "rep v1\ngenerators 1 a\nrelators 0\nscope none\nplmap v1\nbreakpoints 0\npiece 1 0\n");
  CHECK(run("analyze witness-irr --rep /tmp/lineact_id.rep --window -2 2 --max-len 4") == 4);
  spit("/tmp/lineact_t1.rep",
       "rep v1\ngenerators 1 a\nrelators 0\nscope none\nplmap v1\nbreakpoints 0\npiece 1 1\n");
  CHECK(run("analyze witness-irr --rep /tmp/lineact_t1.rep --window -2 2 --max-len 4") == 0);
}

TEST_CASE("family and analyze pipelines compose") {
  CHECK(run("family bs --m 2 --n 3 --out /tmp/lineact_bs.rep") == 0);
  CHECK(run("analyze kappa --rep /tmp/lineact_bs.rep --word a") == 0);
  CHECK(run("analyze conrad --rep /tmp/lineact_bs.rep --word b") == 3);  // not invariant
  CHECK(run("family bs --m 2 --n 3 --s 1/2 --out /tmp/lineact_bspath.rep") == 0);
  CHECK(run("family brin-navas --out /tmp/lineact_bn.rep") == 0);
  CHECK(run("family f2 --omega '++-' --window -4 4 --out /tmp/lineact_f2.rep") == 0);
  CHECK(run("analyze plcheck --count 40 --seed 7") == 0);
}

TEST_CASE("golden SVG and report fixtures reproduce byte-identically") {
  struct Fixture {
    std::string args_prefix;
    std::string golden;
  };
  const Fixture fixtures[] = {
      {"plot --kind graph --window 0 1 --out ", "identity_graph.svg"},
      {"plot --kind f2 --omega '++-' --window -2 2 --out ", "f2_shaded.svg"},
      {"plot --kind brin-navas-lamination --depth 4 --window -17 17 --out ",
       "brin_navas_lamination.svg"},
      {"suspension demo --window -2 2 --max-n 6 --format json --out ", "suspension_demo.json"},
  };
  for (const auto& f : fixtures) {
    std::string out1 = "/tmp/lineact_g1_" + f.golden;
    std::string out2 = "/tmp/lineact_g2_" + f.golden;
    CHECK(run(f.args_prefix + out1) == 0);
    CHECK(run(f.args_prefix + out2) == 0);
    std::string a = slurp(out1);
    CHECK(a == slurp(out2));
    CHECK(a == slurp(kGolden + "/" + f.golden));
  }
}

TEST_CASE("suspension demo svg output is deterministic") {
  CHECK(run("suspension demo --window -3 3 --max-n 8 --svg /tmp/lineact_rho.svg --out /dev/null") ==
        0);
  CHECK(slurp("/tmp/lineact_rho.svg") == slurp(kGolden + "/rho_graphs.svg"));
}
