#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "degenlift/commands.hpp"
#include "degenlift/errors.hpp"
#include "degenlift/familyfile.hpp"

using namespace degenlift;

int main(int argc, char** argv)
{
    CLI::App app{"Liftability of lines in toric degenerations of hypersurfaces"};
    app.require_subcommand(1);
    CommandOptions opts;
    std::string family_path;
    std::string format = "text";
    std::vector<std::string> assignments;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "machine"}));
    };
    auto add_family = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("family", family_path, "Family file");
        if (required) {
            o->required();
        }
        sub->add_option("--set", assignments, "Specialize a parameter, e.g. a=1/2");
    };
    auto add_lines = [&](CLI::App* sub) {
        sub->add_option("--component", opts.component, "Component: factor index or coordinate");
        sub->add_option("--line", opts.line, "Line through two points: \"p0,p1,..;q0,q1,..\"");
        sub->add_flag("--partial", opts.partial, "Use only the rational singular points");
    };

    std::vector<CLI::App*> subs;
    auto* locus = app.add_subcommand("singular-locus", "Singular points on every edge");
    add_family(locus, true);
    auto* prelog = app.add_subcommand("prelog-lines", "Lines meeting the boundary in the singular locus");
    add_family(prelog, true);
    add_lines(prelog);
    auto* kur = app.add_subcommand("kuranishi", "Kuranishi obstruction of lines");
    add_family(kur, true);
    add_lines(kur);
    kur->add_option("--order", opts.order, "Order");
    kur->add_option("--chart", opts.chart, "Coordinate set to 1 at the singular points");
    kur->add_flag("--expect-liftable", opts.expect_liftable, "Exit 1 when an obstruction is found");
    auto* lift = app.add_subcommand("lift", "Direct order-by-order lifting");
    add_family(lift, true);
    add_lines(lift);
    lift->add_option("--order", opts.order, "Order");
    lift->add_option("--chart", opts.chart, "Coordinate set to 1 in the lifting chart");
    lift->add_flag("--expect-liftable", opts.expect_liftable, "Exit 1 when an obstruction is found");
    auto* cls = app.add_subcommand("classify", "Incidence profile and log normal sheaf of lines");
    add_family(cls, true);
    add_lines(cls);
    auto* cen = app.add_subcommand("census", "Line counts");
    cen->add_option("kind", opts.census, "quintic, cubic, cubic-plane-quadric or k3")->required();
    add_family(cen, false);
    cen->add_flag("--partial", opts.partial, "Use only the rational singular points");
    auto* disk = app.add_subcommand("disk-profile", "Normal bundle of the doubled disk");
    disk->add_option("--n", opts.n, "Ambient dimension")->required();
    auto* ver = app.add_subcommand("verify-example", "Run the quartic worked example end to end");
    add_family(ver, false);
    ver->add_option("--seed", opts.seed, "Seed for the random specializations");
    ver->add_option("--samples", opts.samples, "Number of random specializations");
    for (auto* s : {locus, prelog, kur, lift, cls, cen, disk, ver}) {
        add_common(s);
    }

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();
    try {
        for (const auto& a : assignments) {
            opts.set.insert(parse_assignment(a));
        }
        std::optional<FamilySpec> spec;
        if (!family_path.empty()) {
            spec = load_family(family_path);
        }
        const CommandOutcome out = run_command(command, spec, opts);
        std::cout << (format == "machine" ? out.report.machine() : out.report.text());
        return out.exit_code;
    } catch (const ParseError& e) {
        std::cerr << "degenlift: " << (family_path.empty() ? "" : family_path + ":") << e.what()
                  << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "degenlift: " << e.what() << "\n";
        return 3;
    }
}
