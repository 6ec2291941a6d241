#include "degenlift/commands.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

#include "degenlift/census.hpp"
#include "degenlift/errors.hpp"
#include "degenlift/familyfile.hpp"
#include "degenlift/fixtures.hpp"
#include "degenlift/kuranishi.hpp"
#include "degenlift/lifter.hpp"
#include "degenlift/sheaf.hpp"

namespace degenlift {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i ? sep : "") + parts[i];
    }
    return out;
}

std::string ideal_str(const std::vector<Poly>& gens)
{
    if (gens.empty()) {
        return "{}";
    }
    std::vector<std::string> parts;
    for (const auto& g : gens) {
        parts.push_back(g.str());
    }
    return "{" + join(parts, "; ") + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

bool all_digits(const std::string& s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
    });
}

std::vector<int> selected_components(const FamilySpec& spec, const CommandOptions& opts)
{
    std::vector<int> out;
    if (opts.component.empty()) {
        for (int k = 0; k < static_cast<int>(spec.factors.size()); ++k) {
            if (spec.factor_coordinate(static_cast<std::size_t>(k)) >= 0) {
                out.push_back(k);
            }
        }
        return out;
    }
    int k = -1;
    if (all_digits(opts.component)) {
        k = std::stoi(opts.component);
    } else {
        const int c = spec.coordinate_index(opts.component);
        k = c < 0 ? -1 : spec.factor_of_coordinate(c);
    }
    if (k < 0 || k >= static_cast<int>(spec.factors.size()) ||
        spec.factor_coordinate(static_cast<std::size_t>(k)) < 0) {
        throw InvalidArgument("--component '" + opts.component +
                              "' names no coordinate component");
    }
    out.push_back(k);
    return out;
}

std::string component_name(const FamilySpec& spec, int k)
{
    return spec.coordinates[static_cast<std::size_t>(spec.factor_coordinate(static_cast<std::size_t>(k)))];
}

std::vector<Line> prelog_lines(const FamilySpec& spec, int k, bool partial)
{
    const Stratum comp = component(spec, k);
    if (spec.n == 3 && spec.degree == 4) {
        return prelog_lines_K3(spec, comp, partial);
    }
    if (spec.n == 3 && spec.degree == 3) {
        return prelog_lines_cubic(spec, comp, partial);
    }
    throw InvalidArgument("line enumeration supports quartic and cubic surfaces only; pass --line");
}

// The given line, or the pre-log lines through rational singular points.
// Completeness of the enumeration does not matter here, so irrational
// singular points are skipped rather than reported.
std::vector<Line> candidate_lines(Report& r, const FamilySpec& spec, const CommandOptions& opts)
{
    if (!opts.line.empty()) {
        r.add("summary", "line_source", "given");
        return {parse_line_option(opts.line, spec.coordinates.size())};
    }
    r.add("summary", "line_source", "pre-log lines through rational singular points");
    std::vector<Line> out;
    for (int k : selected_components(spec, opts)) {
        for (auto& l : prelog_lines(spec, k, true)) {
            out.push_back(std::move(l));
        }
    }
    if (out.empty()) {
        throw InvalidArgument("no pre-log line found; pass --line");
    }
    return out;
}

const FamilySpec& require_spec(const std::optional<FamilySpec>& spec, const std::string& cmd)
{
    if (!spec) {
        throw InvalidArgument("command '" + cmd + "' needs a family file");
    }
    return *spec;
}

void singular_locus(Report& r, const FamilySpec& spec)
{
    int i = 0;
    for (const auto& edge : all_edges(spec)) {
        const std::string sec = "edge." + std::to_string(++i);
        const EdgeChart ec = edge_chart(spec, edge);
        const EdgeLocus locus = singular_points_on_edge(spec, edge);
        r.add(sec, "stratum", edge.str(spec));
        r.add(sec, "chart", spec.coordinates[static_cast<std::size_t>(ec.u)] + "/" +
                                spec.coordinates[static_cast<std::size_t>(ec.v)]);
        r.add(sec, "rational_points", std::to_string(locus.points.size()));
        int j = 0;
        for (const auto& p : locus.points) {
            const std::string key = "point." + std::to_string(++j);
            r.add(sec, key, point_str(p.point));
            r.add(sec, key + ".coordinate", p.coordinate.str());
            r.add(sec, key + ".ordinary", yes_no(is_ordinary_singularity(spec, p)));
        }
        r.add(sec, "unresolved", std::to_string(locus.unresolved));
        r.add(sec, "fixed_point_roots", std::to_string(locus.fixed_point_roots));
    }
    r.add("summary", "edges", std::to_string(i));
}

void prelog(Report& r, const FamilySpec& spec, const CommandOptions& opts)
{
    std::size_t total = 0;
    for (int k : selected_components(spec, opts)) {
        const std::string sec = "component." + component_name(spec, k);
        const auto lines = prelog_lines(spec, k, opts.partial);
        r.add(sec, "count", std::to_string(lines.size()));
        int j = 0;
        for (const auto& l : lines) {
            r.add(sec, "line." + std::to_string(++j), l.str(spec.coordinates));
        }
        total += lines.size();
    }
    r.add("summary", "total", std::to_string(total));
}

// Returns true when some line is obstructed.
bool kuranishi_cmd(Report& r, const FamilySpec& spec, const CommandOptions& opts)
{
    bool obstructed = false;
    int i = 0;
    for (const auto& line : candidate_lines(r, spec, opts)) {
        const std::string sec = "line." + std::to_string(++i);
        r.add(sec, "line", line.str(spec.coordinates));
        r.add(sec, "component", component_name(spec, line_component(spec, line)));
        r.add(sec, "order", std::to_string(opts.order));
        try {
            const KuranishiValue kv = opts.order == 1 ? kuranishi_first_order(spec, line, Decomposition::EdgeFirst, opts.chart)
                                                      : kuranishi_higher(spec, line, opts.order);
            r.add(sec, "value", kv.value.str());
            r.add(sec, "vanishing_condition",
                  kv.value.is_zero() ? "0" : kv.vanishing_condition.str());
            r.add(sec, "obstruction_ideal",
                  kv.value.is_zero() ? "{}" : ideal_str({kv.vanishing_condition}));
            int j = 0;
            for (const auto& rd : kv.residues) {
                const std::string key = "residue." + std::to_string(++j);
                r.add(sec, key + ".point", point_str(rd.frame.point.point));
                r.add(sec, key + ".b", rd.b.str());
                r.add(sec, key + ".weight", rd.frame.weight().str());
            }
            const bool zero = kv.value.is_zero();
            r.add(sec, "status", zero ? "unobstructed" : (spec.is_symbolic() ? "conditional" : "obstructed"));
            obstructed = obstructed || !zero;
        } catch (const ObstructedAtLowerOrder& e) {
            r.add(sec, "status", "obstructed-at-order-" + std::to_string(e.order()));
            obstructed = true;
        }
    }
    r.add("summary", "lines", std::to_string(i));
    return obstructed;
}

bool lift_cmd(Report& r, const FamilySpec& spec, const CommandOptions& opts)
{
    bool obstructed = false;
    int i = 0;
    LiftOptions lo;
    lo.chart = opts.chart;
    std::size_t solved = 0;
    for (const auto& line : candidate_lines(r, spec, opts)) {
        const std::string sec = "line." + std::to_string(++i);
        r.add(sec, "line", line.str(spec.coordinates));
        const LiftResult res = lift_solve(spec, line, opts.order, lo);
        const bool ok = res.status == LiftStatus::Solved;
        r.add(sec, "status", ok ? "solved" : "obstructed");
        r.add(sec, "order", std::to_string(res.order));
        for (const auto& [k, v] : res.coefficients) {
            r.add(sec, "coeff." + k, v.str());
        }
        for (const auto& st : res.steps) {
            r.add(sec, "step." + std::to_string(st.order) + ".unique", yes_no(st.unique));
            r.add(sec, "step." + std::to_string(st.order) + ".conditions", ideal_str(st.conditions));
        }
        r.add(sec, "obstruction_ideal", ideal_str(res.obstruction_ideal));
        if (ok) {
            r.add(sec, "residual_vanishes", yes_no(lift_residual(spec, res).is_zero()));
            ++solved;
        }
        obstructed = obstructed || !ok;
    }
    r.add("summary", "lines", std::to_string(i));
    r.add("summary", "solved", std::to_string(solved));
    return obstructed;
}

void classify_cmd(Report& r, const FamilySpec& spec, const CommandOptions& opts)
{
    int i = 0;
    for (const auto& line : candidate_lines(r, spec, opts)) {
        const std::string sec = "line." + std::to_string(++i);
        r.add(sec, "line", line.str(spec.coordinates));
        const IncidenceProfile prof =
            spec.n == 4 ? classify_quintic_line(line, spec) : incidence_profile(spec, line);
        r.add(sec, "component", component_name(spec, prof.component));
        int j = 0;
        int in_s = 0;
        for (const auto& h : prof.hits) {
            const std::string key = "hit." + std::to_string(++j);
            r.add(sec, key + ".divisor", component_name(spec, h.factor));
            r.add(sec, key + ".point", point_str(h.point));
            r.add(sec, key + ".flag", to_string(h.flag));
            in_s += h.flag == HitFlag::InS ? 1 : 0;
        }
        std::vector<std::string> tags;
        for (auto t : prof.tags) {
            tags.push_back(to_string(t));
        }
        r.add(sec, "tags", join(tags, " "));
        if (spec.n == 3) {
            // A line in a plane has normal bundle O(1) there.
            const int deg = log_normal_degree(1, in_s);
            const Cohomology h = cohomology_P1(deg);
            r.add(sec, "log_normal", "O(" + std::to_string(deg) + ")");
            r.add(sec, "h0", std::to_string(h.h0));
            r.add(sec, "h1", std::to_string(h.h1));
        }
    }
    r.add("summary", "lines", std::to_string(i));
}

void census_cmd(Report& r, const std::optional<FamilySpec>& spec, const CommandOptions& opts)
{
    CensusReport c;
    if (opts.census == "quintic") {
        c = quintic_census();
    } else if (opts.census == "cubic") {
        c = cubic_census(CubicMode::ToricPlanes);
    } else if (opts.census == "cubic-plane-quadric") {
        c = cubic_census(CubicMode::PlaneQuadric);
    } else if (opts.census == "k3") {
        c = k3_prelog_census(require_spec(spec, "census k3"), opts.partial);
    } else {
        throw InvalidArgument("unknown census '" + opts.census +
                              "' (quintic, cubic, cubic-plane-quadric, k3)");
    }
    r.add("census", "scenario", to_string(c.scenario));
    for (const auto& [k, v] : c.entries) {
        r.add("census", k, std::to_string(v));
    }
}

void disk_cmd(Report& r, const CommandOptions& opts)
{
    const DiskProfile d = disk_profile(opts.n);
    r.add("disk", "n", std::to_string(opts.n));
    r.add("disk", "profile", d.profile.str());
    r.add("disk", "family_dimension", std::to_string(d.family_dimension));
    r.add("disk", "h1", std::to_string(d.h1));
}

// Small rational with numerator in [-9, 9] and denominator in [1, 4].
Rat sample_rat(std::mt19937_64& rng)
{
    const long num = static_cast<long>(rng() % 19) - 9;
    const long den = static_cast<long>(rng() % 4) + 1;
    return Rat(num, den);
}

bool verify_cmd(Report& r, const FamilySpec& spec, const CommandOptions& opts)
{
    bool all = true;
    auto check = [&](const std::string& name, bool ok, const std::string& detail) {
        r.add("checks", name, (ok ? "pass" : "FAIL") + (detail.empty() ? "" : " " + detail));
        all = all && ok;
    };
    const Line line = line_through({1, 0, 0, 1}, {0, 0, -1, 1});
    check("line", line.contains({1, 0, 1, 0}), line.str(spec.coordinates));
    const int comp = spec.factor_of_coordinate(spec.coordinate_index("y"));
    const auto lines = prelog_lines_K3(spec, component(spec, comp), true);
    check("prelog_line_found", std::find(lines.begin(), lines.end(), line) != lines.end(), "");
    const KuranishiValue kv = kuranishi_first_order(spec, line);
    const std::map<std::string, RatFunc> expected_b{
        {point_str({1, 0, 0, 1}), RatFunc::parse("(a+b+2)/(4+a)")},
        {point_str({0, 0, -1, 1}), RatFunc::parse("(a+b-2)/2")},
        {point_str({1, 0, 1, 0}), RatFunc(0)}};
    int j = 0;
    for (const auto& rd : kv.residues) {
        const std::string key = point_str(rd.frame.point.point);
        const auto it = expected_b.find(key);
        check("residue." + std::to_string(++j), it != expected_b.end() && it->second == rd.b,
              key + " b = " + rd.b.str());
    }
    const Poly cond = Poly::parse("a^2 + a*b + 4*a + 6*b - 4");
    check("kuranishi_condition", kv.vanishing_condition == cond, kv.vanishing_condition.str());
    const LiftResult lift = lift_solve(spec, line, 2);
    auto coeff_check = [&](const std::string& k, const RatFunc& want) {
        const auto it = lift.coefficients.find(k);
        const bool found = it != lift.coefficients.end();
        check("lift." + k, found && it->second == want, found ? it->second.str() : "missing");
    };
    coeff_check("c1", RatFunc(-4));
    coeff_check("d1", RatFunc::parse("2-a-b"));
    coeff_check("a1", RatFunc(0));
    check("lift.ideal",
          lift.obstruction_ideal.size() == 1 && lift.obstruction_ideal.front() == cond,
          ideal_str(lift.obstruction_ideal));
    // Random specializations, half of them on the vanishing locus.
    std::mt19937_64 rng(opts.seed);
    int disagreements = 0;
    int on_locus = 0;
    int evaluated = 0;
    for (int s = 0; s < opts.samples; ++s) {
        Rat a = sample_rat(rng);
        Rat b = sample_rat(rng);
        if (s % 2 == 0) {
            while (a == Rat(-6)) {
                a = sample_rat(rng);
            }
            b = (Rat(4) - Rat(4) * a - a * a) / (a + Rat(6));
        }
        const FamilySpec sp = spec.specialized({{"a", a}, {"b", b}});
        bool k_zero = false;
        try {
            k_zero = kuranishi_first_order(sp, line).value.is_zero();
        } catch (const NotOrdinary&) {
            continue;  // degenerate specialization
        }
        const bool lifts = lift_solve(sp, line, 2).status == LiftStatus::Solved;
        ++evaluated;
        on_locus += k_zero ? 1 : 0;
        if (k_zero != lifts) {
            ++disagreements;
            r.add("disagreements", "a=" + a.str() + ",b=" + b.str(),
                  "kuranishi_zero=" + yes_no(k_zero) + " lifts=" + yes_no(lifts));
        }
    }
    check("oracle_agreement", disagreements == 0,
          std::to_string(evaluated) + " samples, " + std::to_string(on_locus) + " on locus");
    return all;
}

}  // namespace

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names{"singular-locus", "prelog-lines", "kuranishi",
                                                "lift",           "classify",     "census",
                                                "disk-profile",   "verify-example"};
    return names;
}

std::string canonical_command(const std::string& command, const CommandOptions& opts)
{
    std::string out = command;
    if (command == "census") {
        out += " " + opts.census;
    }
    if (command == "kuranishi" || command == "lift") {
        out += " --order " + std::to_string(opts.order);
    }
    if (command == "disk-profile") {
        out += " --n " + std::to_string(opts.n);
    }
    if (command == "verify-example") {
        out += " --seed " + std::to_string(opts.seed) + " --samples " + std::to_string(opts.samples);
    }
    if (!opts.component.empty()) {
        out += " --component " + opts.component;
    }
    if (!opts.chart.empty()) {
        out += " --chart " + opts.chart;
    }
    if (!opts.line.empty()) {
        out += " --line " + opts.line;
    }
    for (const auto& [k, v] : opts.set) {
        out += " --set " + k + "=" + v.str();
    }
    if (opts.partial) {
        out += " --partial";
    }
    if (opts.expect_liftable) {
        out += " --expect-liftable";
    }
    return out;
}

Line parse_line_option(const std::string& text, std::size_t dim)
{
    const auto semi = text.find(';');
    if (semi == std::string::npos) {
        throw InvalidArgument("--line expects two points separated by ';'");
    }
    auto point = [&](const std::string& s) {
        Point p;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            p.push_back(Rat::parse(item));
        }
        if (p.size() != dim) {
            throw InvalidArgument("--line point '" + s + "' needs " + std::to_string(dim) +
                                  " coordinates");
        }
        return p;
    };
    return line_through(point(text.substr(0, semi)), point(text.substr(semi + 1)));
}

std::pair<std::string, Rat> parse_assignment(const std::string& text)
{
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw InvalidArgument("--set expects name=value, got '" + text + "'");
    }
    return {text.substr(0, eq), Rat::parse(text.substr(eq + 1))};
}

CommandOutcome run_command(const std::string& command, const std::optional<FamilySpec>& spec_in,
                           const CommandOptions& opts)
{
    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), command) == names.end()) {
        throw InvalidArgument("unknown command '" + command + "'");
    }
    if (opts.order < 1) {
        throw InvalidArgument("--order must be at least 1");
    }
    std::optional<FamilySpec> spec = spec_in;
    if (command == "verify-example" && !spec) {
        spec = quartic_k3_example();
    }
    CommandOutcome out;
    Report& r = out.report;
    r.add("provenance", "command", canonical_command(command, opts));
    r.add("provenance", "spec_sha256", spec ? sha256_hex(serialize_family(*spec)) : "none");
    r.add("provenance", "tool_version", kToolVersion);
    r.add("provenance", "format_version", std::to_string(kReportFormatVersion));
    std::optional<FamilySpec> work = spec;
    if (work && !opts.set.empty()) {
        work = work->specialized(opts.set);
    }
    if (work) {
        r.add("family", "degree", std::to_string(work->degree));
        r.add("family", "n", std::to_string(work->n));
        r.add("family", "params", work->params.empty() ? "none" : join(work->params, " "));
    }
    if (command == "singular-locus") {
        singular_locus(r, require_spec(work, command));
    } else if (command == "prelog-lines") {
        prelog(r, require_spec(work, command), opts);
    } else if (command == "kuranishi") {
        const bool obstructed = kuranishi_cmd(r, require_spec(work, command), opts);
        out.exit_code = opts.expect_liftable && obstructed ? 1 : 0;
    } else if (command == "lift") {
        const bool obstructed = lift_cmd(r, require_spec(work, command), opts);
        out.exit_code = opts.expect_liftable && obstructed ? 1 : 0;
    } else if (command == "classify") {
        classify_cmd(r, require_spec(work, command), opts);
    } else if (command == "census") {
        census_cmd(r, work, opts);
    } else if (command == "disk-profile") {
        disk_cmd(r, opts);
    } else {
        const bool ok = verify_cmd(r, *work, opts);
        r.add("summary", "result", ok ? "pass" : "FAIL");
        out.exit_code = ok ? 0 : 1;
    }
    return out;
}

}  // namespace degenlift
