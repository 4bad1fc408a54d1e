// Command-line front end for the valuation workbench.

#include <iostream>

#include "CLI11.hpp"
#include "valwb/valwb.hpp"

int main(int argc, char** argv) {
    valwb::CliOptions o;
    CLI::App app{"Extensions of the t-adic valuation to K(X) and its completion"};
    app.add_option("command", o.command, "subcommand")->required()->check(CLI::IsMember(valwb::cli_commands()));
    app.add_option("id", o.example_id, "example id for 'example' (6.1, 6.2, 6.3)");

    app.add_option("--config", o.config, "config file (JSON)");
    app.add_option("--prec", o.prec, "working precision, e.g. 64 or 129/2");
    app.add_option("--seed", o.seed, "seed for sampled harnesses");
    app.add_option("--out", o.out, "write the report here instead of stdout");
    std::string format = "text";
    app.add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));

    app.add_option("--poly", o.poly, "polynomial in X, e.g. \"t*X^2 + X + t^3\"");
    app.add_option("--key", o.keys, "key polynomial (repeatable)")
        ->expected(1)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    app.add_option("--f", o.f, "numerator for density");
    app.add_option("--g", o.g, "denominator for density");
    app.add_option("--alpha", o.alpha, "target value: 5, 3/4, inf or (1, 0)");
    app.add_option("--generator", o.generator, "sequence: artin-schreier(p), exponential or mixed-radix(p,q)");
    app.add_option("--center", o.center, "center expansion for kras");
    app.add_option("--minpoly", o.minpoly, "minimal polynomial over K for kras");
    app.add_option("--p", o.p, "prime parameter for examples");
    app.add_option("--q", o.q, "second parameter for example 6.3");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    o.format = format == "structured" ? valwb::OutputFormat::Structured : valwb::OutputFormat::Text;
    return valwb::run_cli(o, std::cout, std::cerr);
}
