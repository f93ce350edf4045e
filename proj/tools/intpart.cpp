#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include <intpart/cli.hpp>

using namespace intpart;

namespace {

void add_common(CLI::App* sub, cli::JobSpec& spec, std::string& q_text, bool with_inputs = true) {
    sub->add_option("--q", q_text, "Exact fraction num/den, 0 < q < 1");
    sub->add_option("--budget-nodes", spec.budget_nodes, "Node budget for exhaustive searches");
    sub->add_option("--seed", spec.seed, "Seed for randomized steps (0 = deterministic default)");
    sub->add_option("--jobs", spec.jobs, "Worker threads across input graphs")->check(CLI::PositiveNumber);
    sub->add_option("--format", spec.format, "Output format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, cli::Format>{{"json", cli::Format::Json},
                                                                               {"csv", cli::Format::Csv}})
                       .description("{json,csv}"));
    sub->add_flag("--timing", spec.timing, "Include elapsed_us fields in records");
    if (with_inputs) sub->add_option("inputs", spec.inputs, "graph6 files, one graph per line ('-' = stdin)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Internal and external graph partitions: solve, verify, sweep, generate, census, survey"};
    app.require_subcommand(1);
    cli::JobSpec spec;
    std::string q_text;

    auto* solve = app.add_subcommand("solve", "Search each input graph for a q-internal (or q-external) partition");
    add_common(solve, spec, q_text);
    solve->add_option("--method", spec.method, "Search method")
        ->transform(CLI::CheckedTransformer(std::map<std::string, cli::Method>{
            {"exact", cli::Method::Exact},
            {"descent", cli::Method::Descent},
            {"potential", cli::Method::Potential},
            {"sweep", cli::Method::Sweep},
            {"refine", cli::Method::Refine},
            {"structured", cli::Method::Structured}})
                       .description("{exact,descent,potential,sweep,refine,structured}"));
    solve->add_option("--kind", spec.kind, "Partition kind for the exact method")
        ->transform(CLI::CheckedTransformer(std::map<std::string, PartitionKind>{
            {"internal", PartitionKind::Internal}, {"external", PartitionKind::External}})
                       .description("{internal,external}"));

    auto* verify = app.add_subcommand("verify", "Classify a given partition of each input graph");
    add_common(verify, spec, q_text);
    verify->add_option("--partition", spec.partition, "Side A as a hex mask, e.g. 0x07")->required();

    auto* sweep = app.add_subcommand("sweep", "Run the complement sweep on each regular input graph");
    add_common(sweep, spec, q_text);

    auto* generate = app.add_subcommand("generate", "Print graph6 lines for generator specs, e.g. petersen, qm(3)");
    add_common(generate, spec, q_text, false);
    generate->add_option("specs", spec.inputs, "Generator specs")->required();
    generate->add_option("--m", spec.m, "Parameter for a bare qm / qm-family spec");

    auto* census = app.add_subcommand("census", "Count external partitions of each input graph");
    add_common(census, spec, q_text);
    census->add_option("--filter", spec.filter, "Which external partitions to count")
        ->transform(CLI::CheckedTransformer(std::map<std::string, CensusFilter>{
            {"all", CensusFilter::All}, {"bisections", CensusFilter::BisectionsOnly},
            {"uneven", CensusFilter::UnevenOnly}})
                       .description("{all,bisections,uneven}"));

    auto* survey = app.add_subcommand("survey", "Run a named preset (cubic-bisection also takes input files)");
    add_common(survey, spec, q_text, false);
    std::string preset;
    std::vector<std::string> survey_inputs;
    survey->add_option("preset", preset, "Preset name")->required()->check(CLI::IsMember(cli::survey_presets()));
    survey->add_option("--input", survey_inputs, "graph6 files for per-graph presets");
    survey->add_option("--m", spec.m, "Largest m for the qm-family preset");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (solve->parsed()) spec.command = cli::Command::Solve;
    if (verify->parsed()) spec.command = cli::Command::Verify;
    if (sweep->parsed()) spec.command = cli::Command::Sweep;
    if (generate->parsed()) spec.command = cli::Command::Generate;
    if (census->parsed()) spec.command = cli::Command::Census;
    if (survey->parsed()) {
        spec.command = cli::Command::Survey;
        spec.inputs = {preset};
        spec.inputs.insert(spec.inputs.end(), survey_inputs.begin(), survey_inputs.end());
    }

    try {
        if (!q_text.empty()) spec.q = Ratio::parse(q_text);
        return cli::execute(spec, std::cin, std::cout);
    } catch (const cli::UsageError& e) {
        std::cerr << "intpart: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "intpart: " << e.what() << "\n";
        return 2;
    } catch (const ParameterError& e) {
        std::cerr << "intpart: " << e.what() << "\n";
        return 2;
    }
}
