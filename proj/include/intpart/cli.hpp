#pragma once

// Batch driver behind the `intpart` executable. Kept header-only so the unit tests can run jobs
// in-process against string streams.

#include <atomic>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "intpart.hpp"
#include "io/json.hpp"

namespace intpart::cli {

using io::json;

enum class Command { Solve, Verify, Sweep, Generate, Census, Survey };
enum class Method { Exact, Descent, Potential, Sweep, Refine, Structured };
enum class Format { Json, Csv };

inline std::string to_string(Command c) {
    switch (c) {
        case Command::Solve: return "solve";
        case Command::Verify: return "verify";
        case Command::Sweep: return "sweep";
        case Command::Generate: return "generate";
        case Command::Census: return "census";
        case Command::Survey: return "survey";
    }
    return "?";
}

inline std::string to_string(Method m) {
    switch (m) {
        case Method::Exact: return "exact";
        case Method::Descent: return "descent";
        case Method::Potential: return "potential";
        case Method::Sweep: return "sweep";
        case Method::Refine: return "refine";
        case Method::Structured: return "structured";
    }
    return "?";
}

struct JobSpec {
    Command command = Command::Solve;
    std::vector<std::string> inputs;  // graph6 files ("-" = stdin); generator specs for generate; preset + files for survey
    std::optional<Ratio> q;
    Method method = Method::Exact;
    PartitionKind kind = PartitionKind::Internal;
    std::uint64_t budget_nodes = kDefaultNodeBudget;
    std::uint64_t seed = 0;
    Format format = Format::Json;
    int jobs = 1;
    std::optional<std::string> partition;  // hex mask for verify
    std::optional<int> m;                  // parameter for bare family names in generate
    CensusFilter filter = CensusFilter::All;
    bool timing = false;                   // keep elapsed_us fields (they make records nondeterministic)
};

/// Thrown for job specs that cannot run at all; the executable maps it to exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

inline std::string error_type(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
    if (dynamic_cast<const ParameterError*>(&e)) return "ParameterError";
    if (dynamic_cast<const DimensionError*>(&e)) return "DimensionError";
    if (dynamic_cast<const BudgetError*>(&e)) return "BudgetError";
    if (dynamic_cast<const GuardError*>(&e)) return "GuardError";
    if (dynamic_cast<const ContractError*>(&e)) return "ContractError";
    if (dynamic_cast<const InapplicableError*>(&e)) return "InapplicableError";
    if (dynamic_cast<const InvariantViolation*>(&e)) return "InvariantViolation";
    if (dynamic_cast<const Error*>(&e)) return "Error";
    return "InternalError";
}

/// One input graph, or a placeholder for an input that could not be read.
struct InputItem {
    std::size_t index = 0;
    std::string file;
    std::size_t line = 0;
    std::string text;                 // graph6 text as read
    std::optional<std::string> error; // read failure; becomes an error record
};

namespace detail {

inline void strip_timing(json& j) {
    if (j.is_object()) {
        j.erase("elapsed_us");
        for (auto& [key, value] : j.items()) strip_timing(value);
    } else if (j.is_array()) {
        for (auto& value : j) strip_timing(value);
    }
}

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline void read_stream(std::istream& in, const std::string& file, std::vector<InputItem>& out) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty()) continue;
        InputItem item;
        item.index = out.size();
        item.file = file;
        item.line = lineno;
        item.text = t;
        out.push_back(std::move(item));
    }
}

inline std::vector<InputItem> collect_inputs(const std::vector<std::string>& files, std::istream& stdin_stream) {
    std::vector<InputItem> items;
    const std::vector<std::string> sources = files.empty() ? std::vector<std::string>{"-"} : files;
    for (const auto& f : sources) {
        if (f == "-") {
            read_stream(stdin_stream, "-", items);
            continue;
        }
        std::ifstream in(f);
        if (!in) {
            InputItem item;
            item.index = items.size();
            item.file = f;
            item.error = "cannot open input file";
            items.push_back(std::move(item));
            continue;
        }
        read_stream(in, f, items);
    }
    return items;
}

inline json with_report(json record, const Graph& g, const std::optional<Partition>& p, const Ratio& q) {
    if (p) record["report"] = io::to_json(classify(g, *p, q));
    return record;
}

inline SearchOutcome solve_structured(const Graph& g, json& extra) {
    const int n = g.order();
    const int d = g.regular_degree();
    if (d < 0) throw InapplicableError("structured: graph is not regular");
    SearchOutcome out;
    out.certified = true;
    if (d == n - 1) {
        out.status = SearchStatus::ExhaustedNone;
        extra["route"] = "complete";
    } else if (d == n - 2) {
        out.status = SearchStatus::Found;
        out.partition = bisection_from_matching(g);
        extra["route"] = "n_minus_2";
    } else if (d == n - 3) {
        out = solve_n_minus_3(g);
        extra["route"] = "n_minus_3";
    } else if (d == n - 4) {
        const auto r = analyze_n_minus_4(g);
        extra["route"] = "n_minus_4";
        extra["n_minus_4"] = io::to_json(r);
        out.status = r.partition ? SearchStatus::Found : SearchStatus::ExhaustedNone;
        out.partition = r.partition;
    } else {
        throw InapplicableError("structured: no closed-form solver for d = " + std::to_string(d) +
                                " on " + std::to_string(n) + " vertices");
    }
    return out;
}

inline json run_solve(const JobSpec& spec, const Graph& g) {
    const Ratio q = spec.q.value_or(Ratio::half());
    json rec{{"method", to_string(spec.method)}, {"q", q.to_string()}};
    SearchOutcome out;
    PartitionKind kind = spec.kind;
    const int n = g.order();
    switch (spec.method) {
        case Method::Exact: {
            PartitionQuery query;
            query.kind = kind;
            query.q = q;
            query.node_budget = spec.budget_nodes;
            out = find_partition_exhaustive(g, query);
            break;
        }
        case Method::Descent: {
            if (kind != PartitionKind::Internal) throw UsageError("descent searches internal partitions only");
            const long k = (q.num() * n + q.den() / 2) / q.den();
            if (k < 1 || k >= n) throw ParameterError("descent: q n rounds to a trivial side size");
            intpart::detail::Stopwatch clock;
            const auto r = min_cut_descent(g, static_cast<int>(k), spec.seed);
            out.stats.moves = r.evaluated;
            out.status = is_q_internal(g, r.partition, q) ? SearchStatus::Found : SearchStatus::ExhaustedNone;
            if (out.found()) out.partition = r.partition;
            out.stats.elapsed_us = clock.elapsed_us();
            rec["cut"] = r.cut;
            break;
        }
        case Method::Potential: {
            kind = PartitionKind::External;
            intpart::detail::Stopwatch clock;
            const auto r = find_q_external_potential(g, q);
            out.stats.moves = r.moves;
            out.status = r.partition.trivial() ? SearchStatus::ExhaustedNone : SearchStatus::Found;
            if (out.found()) out.partition = r.partition;
            out.stats.elapsed_us = clock.elapsed_us();
            rec["final_potential"] = r.final_potential;
            break;
        }
        case Method::Sweep: {
            if (kind != PartitionKind::Internal) throw UsageError("sweep searches internal partitions only");
            const auto s = algorithm1_sweep(g);
            for (const auto& e : s.entries) {
                if (e.q && *e.q == q && e.verified) {
                    out.status = SearchStatus::Found;
                    out.partition = e.partition;
                    rec["p"] = e.p;
                    break;
                }
            }
            if (!out.found()) out.status = SearchStatus::ExhaustedNone;
            break;
        }
        case Method::Refine: {
            if (kind != PartitionKind::Internal || q != Ratio::half()) {
                throw UsageError("refine searches internal partitions at q = 1/2 only");
            }
            RefineStartOptions options;
            options.seed = spec.seed;
            const Partition start = default_refine_start(g, options);
            rec["start"] = io::to_json(start);
            out = refine_to_internal(g, start);
            break;
        }
        case Method::Structured: {
            if (kind != PartitionKind::Internal || q != Ratio::half()) {
                throw UsageError("structured solvers handle internal partitions at q = 1/2 only");
            }
            out = solve_structured(g, rec);
            break;
        }
    }
    rec["kind"] = kind == PartitionKind::Internal ? "internal" : "external";
    rec["outcome"] = io::to_json(out);
    return with_report(rec, g, out.partition, q);
}

inline json run_verify(const JobSpec& spec, const Graph& g) {
    const Ratio q = spec.q.value_or(Ratio::half());
    const Partition p = Partition::from_hex(*spec.partition, g.order());
    return json{{"q", q.to_string()}, {"report", io::to_json(classify(g, p, q))}};
}

inline json run_census(const JobSpec& spec, const Graph& g) {
    return json{{"census", io::to_json(external_partition_census(g, spec.filter, spec.budget_nodes))}};
}

}  // namespace detail

/// Runs one command over every input graph and writes one record per graph. Returns 0 when every
/// graph produced a result record, 1 when any produced an error record.
int execute(const JobSpec& spec, std::istream& in, std::ostream& out);

namespace detail {

using GraphJob = std::function<json(const Graph&)>;

class RecordSink {
public:
    RecordSink(std::ostream& out, Format format) : out_(out), format_(format) {
        if (format_ == Format::Csv) out_ << "index,file,line,graph6,command,status,certified,partition,detail,error\n";
    }

    void write(const json& record) {
        std::string text;
        if (format_ == Format::Json) {
            text = record.dump() + "\n";
        } else {
            text = csv_row(record);
        }
        std::lock_guard lock(mutex_);
        out_ << text;
        out_.flush();
    }

private:
    static std::string csv_field(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        return q + "\"";
    }

    static std::string scalar(const json& j) {
        if (j.is_null()) return "";
        if (j.is_string()) return j.get<std::string>();
        return j.dump();
    }

    static std::string csv_row(const json& r) {
        std::string status;
        std::string certified;
        std::string partition;
        std::string detail;
        if (r.contains("outcome")) {
            const auto& o = r["outcome"];
            status = scalar(o["status"]);
            certified = scalar(o["certified"]);
            if (!o["partition"].is_null()) partition = scalar(o["partition"]["mask"]);
        } else if (r.contains("report")) {
            const auto& f = r["report"]["flags"];
            status = "verified";
            partition = scalar(r["report"]["partition"]["mask"]);
            detail = "q_internal=" + scalar(f["q_internal"]) + ";q_external=" + scalar(f["q_external"]);
        } else if (r.contains("sweep")) {
            status = "sweep";
            for (const auto& e : r["sweep"]["entries"]) {
                detail += (detail.empty() ? "" : ";") + std::to_string(e["p"].get<int>()) + ":" +
                          std::to_string(e["size"].get<int>());
            }
        } else if (r.contains("census")) {
            status = r["census"]["complete"].get<bool>() ? "complete" : "budget_exceeded";
            detail = "matching=" + scalar(r["census"]["matching"]);
        } else if (r.contains("survey")) {
            status = "survey";
            detail = r["survey"].dump();
        }
        std::string error;
        if (r.contains("error")) error = scalar(r["error"]["type"]) + ": " + scalar(r["error"]["message"]);
        const std::string fields[] = {scalar(r["index"]), scalar(r["file"]), scalar(r["line"]), scalar(r["graph6"]),
                                      scalar(r["command"]), status, certified, partition, detail, error};
        std::string row;
        for (std::size_t i = 0; i < std::size(fields); ++i) row += (i ? "," : "") + csv_field(fields[i]);
        return row + "\n";
    }

    std::ostream& out_;
    Format format_;
    std::mutex mutex_;
};

inline json error_record(const std::exception& e) {
    json err{{"type", error_type(e)}, {"message", e.what()}};
    if (const auto* c = dynamic_cast<const ContractError*>(&e); c && c->vertex() >= 0) err["vertex"] = c->vertex();
    return json{{"error", err}};
}

inline json run_item(const JobSpec& spec, const InputItem& item, const GraphJob& job, bool& failed) {
    json rec{{"schema_version", io::kSchemaVersion},
             {"index", item.index},
             {"file", item.file},
             {"line", item.line},
             {"graph6", item.text.empty() ? json(nullptr) : json(item.text)},
             {"command", to_string(spec.command)}};
    json body;
    if (item.error) {
        body = json{{"error", json{{"type", "IOError"}, {"message", *item.error}}}};
    } else {
        try {
            const Graph g = graph6::decode(item.text);
            body = job(g);
            body["n"] = g.order();
        } catch (const std::exception& e) {
            body = error_record(e);
        }
    }
    if (body.contains("error")) failed = true;
    rec.update(body);
    if (!spec.timing) strip_timing(rec);
    return rec;
}

/// Runs `job` on every item; workers take the next unclaimed index, records are written as they finish.
inline int run_items(const JobSpec& spec, const std::vector<InputItem>& items, const GraphJob& job, RecordSink& sink) {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> any_failed{false};
    const auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= items.size()) return;
            bool failed = false;
            sink.write(run_item(spec, items[i], job, failed));
            if (failed) any_failed = true;
        }
    };
    const int jobs = std::max(1, spec.jobs);
    if (jobs == 1 || items.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return any_failed ? 1 : 0;
}

inline Graph generate_one(const JobSpec& spec, const std::string& text) {
    GeneratorSpec gs = parse_generator_spec(text);
    if (gs.params.empty() && gs.operands.empty() && spec.m && (gs.family == "qm" || gs.family == "qm-family")) {
        gs.params.push_back(*spec.m);
    }
    if (gs.family == "random-regular") {
        intpart::detail::expect_params(gs, 2);
        return random_regular(static_cast<int>(gs.params[0]), static_cast<int>(gs.params[1]), spec.seed);
    }
    return generate(gs);
}

inline json survey_graph_record(const std::string& name, const Graph& g) {
    return json{{"name", name}, {"graph6", graph6::encode(g)}, {"n", g.order()}};
}

// Presets that need no input files. Each yields one record per graph it examines.
inline std::vector<json> survey_builtin(const std::string& preset, const JobSpec& spec) {
    std::vector<json> out;
    if (preset == "nonexistence-table") {
        const std::vector<std::pair<std::string, std::string>> table{
            {"K4", "complete(4)"},
            {"K3,3", "complete-multipartite(3,3)"},
            {"K5", "complete(5)"},
            {"K7", "complete(7)"},
            {"K3,3,3", "complete-multipartite(3,3,3)"},
            {"Q3", "qm(3)"},
            {"Q4", "qm(4)"}};
        for (const auto& [name, gen] : table) {
            const Graph g = generate(gen);
            auto rec = survey_graph_record(name, g);
            const auto r = find_internal_exhaustive(g, Ratio::half(), spec.budget_nodes);
            rec["outcome"] = io::to_json(r);
            out.push_back(rec);
        }
    } else if (preset == "petersen") {
        const Graph g = petersen_graph();
        const Graph c = complement(g);
        auto rec = survey_graph_record("petersen", g);
        rec["edge_class"] = to_string(edge_color_cubic(g).verdict);
        rec["external_bisections"] = external_partition_census(g, CensusFilter::BisectionsOnly).matching;
        rec["independence_number"] = max_independent_set(g).size();
        PartitionQuery bis;
        bis.size_a = 5;
        rec["complement_internal"] = io::to_json(find_internal_exhaustive(c));
        rec["complement_internal_bisection"] = io::to_json(find_partition_exhaustive(c, bis));
        out.push_back(rec);
    } else if (preset == "k333-sweep") {
        const Graph g = complete_multipartite({3, 3, 3});
        auto rec = survey_graph_record("K3,3,3", g);
        rec["sweep"] = io::to_json(algorithm1_sweep(g));
        out.push_back(rec);
    } else if (preset == "qm-family") {
        const int top = spec.m.value_or(4);
        for (int m = 3; m <= top; ++m) {
            const Graph g = qm_graph(m);
            auto rec = survey_graph_record("Q" + std::to_string(m), g);
            rec["outcome"] = io::to_json(find_internal_exhaustive(g, Ratio::half(), spec.budget_nodes));
            rec["sweep"] = io::to_json(algorithm1_sweep(g));
            out.push_back(rec);
        }
    } else if (preset == "fig28") {
        const Graph g = fig28_graph();
        auto rec = survey_graph_record("fig28", g);
        rec["census"] = io::to_json(external_partition_census(g, CensusFilter::UnevenOnly, spec.budget_nodes, 1));
        out.push_back(rec);
    } else {
        throw UsageError("unknown survey preset '" + preset + "'");
    }
    return out;
}

// Per-graph preset over input files: cubic graphs and their external bisections.
inline json survey_cubic_bisection(const Graph& g) {
    if (g.regular_degree() != 3) throw ParameterError("cubic-bisection: graph is not cubic");
    const auto coloring = edge_color_cubic(g);
    json rec{{"edge_class", to_string(coloring.verdict)}};
    if (coloring.verdict == EdgeClass::Class1) {
        rec["coloring_bisection"] = io::to_json(bisection_from_two_colors(g, coloring, 0, 1));
    }
    const auto census = external_partition_census(g, CensusFilter::BisectionsOnly, kDefaultNodeBudget, 1);
    rec["has_external_bisection"] = census.matching > 0;
    const auto uneven = external_partition_census(g, CensusFilter::UnevenOnly, kDefaultNodeBudget, 1);
    rec["has_uneven_external"] = uneven.matching > 0;
    return json{{"survey", rec}};
}

}  // namespace detail

inline const std::vector<std::string>& survey_presets() {
    static const std::vector<std::string> presets{"nonexistence-table", "petersen", "k333-sweep", "qm-family", "fig28",
                                                  "cubic-bisection"};
    return presets;
}

inline int execute(const JobSpec& spec, std::istream& in, std::ostream& out) {
    if (spec.jobs < 1) throw UsageError("--jobs must be at least 1");
    if (spec.command == Command::Generate) {
        if (spec.inputs.empty()) throw UsageError("generate needs at least one generator spec");
        int status = 0;
        for (const auto& text : spec.inputs) {
            try {
                out << graph6::encode(detail::generate_one(spec, text)) << "\n";
            } catch (const Error& e) {
                if (dynamic_cast<const UsageError*>(&e)) throw;
                std::cerr << "intpart: generate " << text << ": " << e.what() << "\n";
                status = 1;
            }
        }
        return status;
    }

    detail::RecordSink sink(out, spec.format);
    if (spec.command == Command::Survey) {
        if (spec.inputs.empty()) throw UsageError("survey needs a preset name");
        const std::string preset = spec.inputs.front();
        if (preset == "cubic-bisection") {
            std::vector<std::string> files(spec.inputs.begin() + 1, spec.inputs.end());
            const auto items = detail::collect_inputs(files, in);
            return detail::run_items(spec, items, [](const Graph& g) { return detail::survey_cubic_bisection(g); }, sink);
        }
        std::size_t index = 0;
        for (auto body : detail::survey_builtin(preset, spec)) {
            json rec{{"schema_version", io::kSchemaVersion}, {"index", index++}, {"file", "preset:" + preset},
                     {"line", nullptr}, {"graph6", body["graph6"]}, {"command", "survey"}};
            body.erase("graph6");
            rec["survey"] = body;
            if (!spec.timing) detail::strip_timing(rec);
            sink.write(rec);
        }
        return 0;
    }

    detail::GraphJob job;
    switch (spec.command) {
        case Command::Solve: job = [&spec](const Graph& g) { return detail::run_solve(spec, g); }; break;
        case Command::Verify:
            if (!spec.partition) throw UsageError("verify needs --partition");
            if (!spec.q) throw UsageError("verify needs --q");
            job = [&spec](const Graph& g) { return detail::run_verify(spec, g); };
            break;
        case Command::Sweep: job = [](const Graph& g) { return json{{"sweep", io::to_json(algorithm1_sweep(g))}}; }; break;
        case Command::Census: job = [&spec](const Graph& g) { return detail::run_census(spec, g); }; break;
        default: throw UsageError("unsupported command");
    }
    if (spec.command == Command::Solve && !spec.q) throw UsageError("solve needs --q");
    const auto items = detail::collect_inputs(spec.inputs, in);
    return detail::run_items(spec, items, job, sink);
}

}  // namespace intpart::cli
