// slackhopf: a workbench for comagma algebras over exact fields. Decides
// slack Hopf-ness, derives antipode data, computes slackness, classifies
// quasi-Hopf structures and runs the finite category/monoid criteria.
#include <iostream>

#include "CLI11.hpp"

#include "slackhopf/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"workbench for slack Hopf structures on comagma algebras"};
    app.require_subcommand(1);

    std::string file;

    auto* validate = app.add_subcommand("validate", "check the axioms of an algebra file");
    validate->add_option("file", file, "algebra file")->required();

    slackhopf::cli::SlackOptions sopt;
    std::string check_vfile, find_mode;
    auto* slack = app.add_subcommand("slack", "certify or search for slack left Hopf structures");
    slack->add_option("file", file, "algebra file")->required();
    auto* copt = slack->add_option("--check", check_vfile, "tensor file with a candidate v");
    auto* fopt = slack->add_option("--find", find_mode, "search mode: exhaustive or randomized")
                     ->check(CLI::IsMember({"exhaustive", "randomized"}));
    copt->excludes(fopt);
    slack->add_option("--seed", sopt.seed, "seed for randomized search");
    slack->add_option("--trials", sopt.trials, "trial budget for randomized search");

    slackhopf::cli::QuasiOptions qopt;
    std::string classify_vfile, decompose_vfile, antipode_qafile;
    auto* quasi = app.add_subcommand("quasi", "quasi-bialgebra classification and decomposition");
    quasi->add_option("file", file, "quasi-bialgebra file")->required();
    auto* clopt = quasi->add_option("--classify", classify_vfile, "tensor file with a slack structure v");
    auto* deopt = quasi->add_option("--decompose", decompose_vfile, "tensor file with a slack structure v");
    auto* anopt = quasi->add_option("--antipode", antipode_qafile, "qa file with a quasi-antipode candidate");
    clopt->excludes(deopt)->excludes(anopt);
    deopt->excludes(anopt);

    std::string kind;
    auto* fincat = app.add_subcommand("fincat", "groupoid/group detection by exhaustive search");
    fincat->add_option("file", file, "category or monoid file")->required();
    fincat->add_option("--kind", kind, "category or monoid")
        ->required()
        ->check(CLI::IsMember({"category", "monoid"}));

    CLI11_PARSE(app, argc, argv);

    return slackhopf::cli::guarded(std::cout, [&]() -> int {
        if (app.got_subcommand(validate)) return slackhopf::cli::cmd_validate(file, std::cout);
        if (app.got_subcommand(slack)) {
            if (!check_vfile.empty()) sopt.check_vfile = check_vfile;
            if (!find_mode.empty()) sopt.find_mode = find_mode;
            if (!sopt.check_vfile && !sopt.find_mode)
                throw slackhopf::ParseError("slack needs --check or --find", 0);
            return slackhopf::cli::cmd_slack(file, sopt, std::cout);
        }
        if (app.got_subcommand(quasi)) {
            if (!classify_vfile.empty()) qopt.classify_vfile = classify_vfile;
            if (!decompose_vfile.empty()) qopt.decompose_vfile = decompose_vfile;
            if (!antipode_qafile.empty()) qopt.antipode_qafile = antipode_qafile;
            if (!qopt.classify_vfile && !qopt.decompose_vfile && !qopt.antipode_qafile)
                throw slackhopf::ParseError("quasi needs --classify, --decompose or --antipode", 0);
            return slackhopf::cli::cmd_quasi(file, qopt, std::cout);
        }
        return slackhopf::cli::cmd_fincat(file, kind, std::cout);
    });
}
