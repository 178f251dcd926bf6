#include "lenfun/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "lenfun/io.hpp"
#include "lenfun/lengths.hpp"
#include "lenfun/locsys.hpp"
#include "lenfun/scenarios.hpp"
#include "lenfun/zmod.hpp"

namespace lenfun {

namespace {

constexpr int kOk = 0;
constexpr int kScenarioFailed = 1;
constexpr int kUsage = 2;
constexpr int kValidation = 3;

struct ValidationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SpectrumTree load_spectrum(const std::string& path) {
    SpectrumTree tree = parse_spectrum(load_json_file(path));
    const auto violations = tree.validate();
    if (!violations.empty()) throw ValidationFailure("spectrum: " + violations.front());
    return tree;
}

int cmd_eval(const std::string& spectrum_path, const std::string& lengthfn_path,
             const std::string& ideal_path, const std::string& module_path, std::ostream& out) {
    const LengthFnFile lengthfn = parse_lengthfn(load_json_file(lengthfn_path));

    if (const ZLengthFn* zfn = std::get_if<ZLengthFn>(&lengthfn)) {
        FgZModule module;
        if (!module_path.empty()) {
            const ZModuleFile file = parse_zmodule(load_json_file(module_path));
            module = smith_normal_form(file.presentation, file.generators);
        } else if (!ideal_path.empty()) {
            module = parse_zideal(load_json_file(ideal_path)).quotient();
        } else {
            throw ParseError("integer-backend evaluation needs --ideal or --module");
        }
        out << eval_z(*zfn, module).to_string() << "\n";
        return kOk;
    }

    if (spectrum_path.empty()) throw ParseError("tree-backend evaluation needs --spectrum");
    if (ideal_path.empty()) throw ParseError("tree-backend evaluation needs --ideal");
    const SpectrumTree tree = load_spectrum(spectrum_path);
    const IdealDescriptor ideal = parse_ideal(load_json_file(ideal_path));
    {
        const auto violations = validate_ideal(tree, ideal);
        if (!violations.empty()) throw ValidationFailure("ideal: " + violations.front());
    }

    if (const CanonicalLengthFn* l = std::get_if<CanonicalLengthFn>(&lengthfn)) {
        const auto violations = validate_canonical(tree, *l);
        if (!violations.empty()) throw ValidationFailure("lengthfn: " + violations.front());
        out << eval(tree, *l, ideal).to_string() << "\n";
        return kOk;
    }

    const auto& delta = std::get<std::set<PrimeId>>(lengthfn);
    for (const PrimeId& p : delta) {
        if (p != kRootId && !tree.contains(p))
            throw ValidationFailure("spectral_delta: unknown prime " + p);
    }
    const LocalizingSystem system = spectral_system(tree, delta);
    out << length_of_system(system)(ideal).to_string() << "\n";
    return kOk;
}

int cmd_canonicalize(const std::string& spectrum_path, const std::string& lengthfn_path,
                     std::ostream& out) {
    const SpectrumTree tree = load_spectrum(spectrum_path);
    const LengthFnFile lengthfn = parse_lengthfn(load_json_file(lengthfn_path));

    CanonicalLengthFn result;
    if (const CanonicalLengthFn* l = std::get_if<CanonicalLengthFn>(&lengthfn)) {
        const auto violations = validate_canonical(tree, *l);
        if (!violations.empty()) throw ValidationFailure("lengthfn: " + violations.front());
        result = canonicalize(tree, oracle_of(tree, *l));
    } else if (const auto* delta = std::get_if<std::set<PrimeId>>(&lengthfn)) {
        for (const PrimeId& p : *delta) {
            if (p != kRootId && !tree.contains(p))
                throw ValidationFailure("spectral_delta: unknown prime " + p);
        }
        result = canonicalize(tree, length_of_system(spectral_system(tree, *delta)));
    } else {
        throw ParseError("canonicalize expects canonical class data or a spectral system");
    }
    out << lengthfn_to_json(result).dump(2) << "\n";
    return kOk;
}

int cmd_scenario(const std::string& name, std::uint64_t seed, long cases,
                 const std::string& format, std::ostream& out) {
    const Report report = run_scenario(name, seed, cases);
    if (format == "text")
        out << report_to_text(report);
    else
        out << report_to_json(report).dump(2) << "\n";
    return report.ok() ? kOk : kScenarioFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact calculus for length functions on integral domains"};
    app.require_subcommand(1);

    std::string spectrum_path, lengthfn_path, ideal_path, module_path;

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a length function on an ideal");
    eval_cmd->add_option("--spectrum", spectrum_path, "spectrum tree file");
    eval_cmd->add_option("--lengthfn", lengthfn_path, "length function file")->required();
    eval_cmd->add_option("--ideal", ideal_path, "ideal file");
    eval_cmd->add_option("--module", module_path, "integer-backend presentation file");

    CLI::App* canon_cmd =
        app.add_subcommand("canonicalize", "recover the canonical form of a length function");
    canon_cmd->add_option("--spectrum", spectrum_path, "spectrum tree file")->required();
    canon_cmd->add_option("--lengthfn", lengthfn_path, "length function or system file")->required();

    std::string scenario_name, format = "json";
    std::uint64_t seed = 1;
    long cases = 0;
    CLI::App* scen_cmd = app.add_subcommand("scenario", "run a named verification suite");
    scen_cmd->add_option("name", scenario_name, "scenario name")->required();
    scen_cmd->add_option("--seed", seed, "random seed");
    scen_cmd->add_option("--cases", cases, "number of cases (scenario default when omitted)");
    scen_cmd->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "text"}));

    std::vector<const char*> argv;
    argv.push_back("lenfun");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }

    try {
        if (app.got_subcommand(eval_cmd))
            return cmd_eval(spectrum_path, lengthfn_path, ideal_path, module_path, out);
        if (app.got_subcommand(canon_cmd))
            return cmd_canonicalize(spectrum_path, lengthfn_path, out);
        if (!is_scenario(scenario_name)) {
            err << "unknown scenario " << scenario_name << "\n";
            return kUsage;
        }
        if (cases == 0) cases = default_cases(scenario_name);
        return cmd_scenario(scenario_name, seed, cases, format, out);
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const ValidationFailure& e) {
        err << e.what() << "\n";
        return kValidation;
    } catch (const CanonicalizeError& e) {
        err << e.what() << "\n";
        return kValidation;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kValidation;
    } catch (const std::domain_error& e) {
        err << e.what() << "\n";
        return kValidation;
    } catch (const std::out_of_range& e) {
        err << e.what() << "\n";
        return kValidation;
    }
}

}  // namespace lenfun
