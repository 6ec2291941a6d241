#include <doctest.h>

#include <random>

#include "degenlift/commands.hpp"
#include "degenlift/errors.hpp"
#include "degenlift/familyfile.hpp"
#include "degenlift/fixtures.hpp"
#include "degenlift/report.hpp"
#include "k3_fixtures.hpp"

using namespace degenlift;

namespace {

const std::string kFixtures = std::string(DEGENLIFT_SOURCE_DIR) + "/fixtures/";

const char* kSmallFamily = R"(# a small quartic
[ambient]
n = 3
degree = 4
coordinates = x y z w
[factors]
x
y
z
w
[f]
1 x^4
-1 w^4
)";

int error_line(const std::string& text)
{
    try {
        (void)parse_family(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("shipped example file")
{
    const FamilySpec s = load_family(kFixtures + "quartic_k3_example.fam");
    CHECK(s == quartic_k3_example());
    CHECK(s.params == std::vector<std::string>{"a", "b"});
    CHECK(load_family(kFixtures + "cubic_rational.fam") == cubic_rational_fixture());
    CHECK_THROWS_AS(load_family(kFixtures + "missing.fam"), InvalidArgument);
}

TEST_CASE("family file round trip")
{
    std::vector<FamilySpec> specs{quartic_k3_example(), cubic_rational_fixture(),
                                  quartic_k3_example().specialized({{"a", Rat(1, 3)}}),
                                  parse_family(kSmallFamily)};
    std::mt19937_64 rng(4);
    for (int i = 0; i < 4; ++i) {
        specs.push_back(testgen::random_k3_line_fixture(rng, i % 2 == 0).spec);
    }
    for (const auto& s : specs) {
        const std::string text = serialize_family(s);
        const FamilySpec back = parse_family(text);
        CHECK(back == s);
        CHECK(serialize_family(back) == text);
    }
}

TEST_CASE("family file errors")
{
    std::string bad = kSmallFamily;
    bad += "1 x^3\n";
    CHECK_THROWS_AS(parse_family(bad), NonHomogeneous);

    std::string no_factor = kSmallFamily;
    no_factor.replace(no_factor.find("w\n[f]"), 2, "");
    CHECK_THROWS_AS(parse_family(no_factor), InvalidFamily);

    std::string bad_coeff = kSmallFamily;
    bad_coeff.replace(bad_coeff.find("-1 w^4"), 6, "1/0 w^4");
    CHECK(error_line(bad_coeff) == 13);

    std::string bad_expr = kSmallFamily;
    bad_expr.replace(bad_expr.find("1 x^4"), 5, "(a + x^4");
    CHECK(error_line(bad_expr) == 12);

    CHECK(error_line("[ambient]\nn = three\n") == 2);
    CHECK(error_line("[nonsense]\n") == 1);
    CHECK(error_line("n = 3\n") == 1);
}

TEST_CASE("report renderings")
{
    Report r;
    r.add("first", "alpha", "1");
    r.add("second", "beta", "x + y");
    r.add("first", "gamma", "-1/2");
    CHECK(r.get("first", "gamma") == "-1/2");
    CHECK(r.get("second", "missing").empty());
    CHECK(r.machine() ==
          "# degenlift report v1\n[first]\nalpha = 1\ngamma = -1/2\n[second]\nbeta = x + y\n");
    const std::string text = r.text();
    CHECK(text.find("alpha") != std::string::npos);
    CHECK(text.find("x + y") != std::string::npos);
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("commands on the worked example")
{
    const FamilySpec s = quartic_k3_example();
    CommandOptions o;
    const CommandOutcome k = run_command("kuranishi", s, o);
    CHECK(k.exit_code == 0);
    CHECK(k.report.get("line.1", "vanishing_condition") == "a^2 + a*b + 4*a + 6*b - 4");
    CHECK(k.report.get("line.1", "obstruction_ideal") == "{a^2 + a*b + 4*a + 6*b - 4}");
    CHECK(k.report.get("provenance", "spec_sha256") == sha256_hex(serialize_family(s)));
    CHECK(k.report.get("provenance", "tool_version") == kToolVersion);

    o.expect_liftable = true;
    CHECK(run_command("kuranishi", s, o).exit_code == 1);

    CommandOptions lift;
    lift.order = 2;
    lift.line = "1,0,0,1;0,0,-1,1";
    const CommandOutcome l = run_command("lift", s, lift);
    CHECK(l.report.get("line.1", "coeff.c1") == "-4");
    CHECK(l.report.get("line.1", "coeff.d1") == "-a - b + 2");
    CHECK(l.report.get("line.1", "coeff.a1") == "0");
    CHECK(l.report.get("line.1", "obstruction_ideal") == "{a^2 + a*b + 4*a + 6*b - 4}");

    CommandOptions spec_opts = lift;
    spec_opts.set = {{"a", Rat(0)}, {"b", Rat(2, 3)}};
    spec_opts.expect_liftable = true;
    const CommandOutcome solved = run_command("lift", s, spec_opts);
    CHECK(solved.exit_code == 0);
    CHECK(solved.report.get("line.1", "status") == "solved");
    CHECK(solved.report.get("line.1", "obstruction_ideal") == "{}");

    CommandOptions cls;
    cls.line = "1,0,0,1;0,0,-1,1";
    const CommandOutcome c = run_command("classify", s, cls);
    CHECK(c.report.get("line.1", "log_normal") == "O(-2)");
    CHECK(c.report.get("line.1", "h0") == "0");
    CHECK(c.report.get("line.1", "h1") == "1");

    CHECK(run_command("verify-example", std::nullopt, CommandOptions{}).exit_code == 0);
}

TEST_CASE("commands without a family")
{
    CommandOptions o;
    o.census = "quintic";
    const CommandOutcome q = run_command("census", std::nullopt, o);
    CHECK(q.report.get("census", "class1") == "575");
    CHECK(q.report.get("census", "class2") == "675");
    CHECK(q.report.get("census", "total_3fold") == "2875");
    CHECK(q.report.get("provenance", "spec_sha256") == "none");

    o.census = "cubic-plane-quadric";
    CHECK(run_command("census", std::nullopt, o).report.get("census", "total") == "27");

    CommandOptions d;
    d.n = 5;
    const CommandOutcome disk = run_command("disk-profile", std::nullopt, d);
    CHECK(disk.report.get("disk", "profile") == "[-1, -1, 0]");
    CHECK(disk.report.get("disk", "family_dimension") == "4");

    CHECK_THROWS_AS(run_command("kuranishi", std::nullopt, CommandOptions{}), InvalidArgument);
    CHECK_THROWS_AS(run_command("nonsense", std::nullopt, CommandOptions{}), InvalidArgument);
    o.census = "sextic";
    CHECK_THROWS_AS(run_command("census", std::nullopt, o), InvalidArgument);
}

TEST_CASE("reports are deterministic")
{
    const FamilySpec s = quartic_k3_example();
    for (const auto& name : command_names()) {
        CommandOptions o;
        o.census = "cubic";
        o.order = name == "lift" ? 2 : 1;
        o.partial = true;
        o.samples = 6;
        const bool needs_family = name != "census" && name != "disk-profile";
        const std::optional<FamilySpec> fam =
            needs_family ? std::optional<FamilySpec>(s) : std::nullopt;
        const std::string first = run_command(name, fam, o).report.machine();
        CHECK(run_command(name, fam, o).report.machine() == first);
        CHECK(first.rfind("# degenlift report v1\n[provenance]\n", 0) == 0);
    }
}

TEST_CASE("option parsing")
{
    const Line l = parse_line_option("1,0,0,1; 0,0,-1,1", 4);
    CHECK(l == line_through({Rat(1), Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(0), Rat(-1), Rat(1)}));
    CHECK_THROWS_AS(parse_line_option("1,0,0;0,0,1", 4), InvalidArgument);
    CHECK(parse_assignment("a=1/2") == std::pair<std::string, Rat>{"a", Rat(1, 2)});
    CHECK_THROWS_AS(parse_assignment("a"), InvalidArgument);
    CommandOptions o;
    o.order = 2;
    o.line = "1,0,0,1;0,0,-1,1";
    CHECK(canonical_command("lift", o) == "lift --order 2 --line 1,0,0,1;0,0,-1,1");
}
