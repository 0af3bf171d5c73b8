#include <algorithm>
#include <atomic>
#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "widthdual/io.hpp"
#include "widthdual/oracle.hpp"
#include "widthdual/solve.hpp"

using namespace wdk;
using nlohmann::json;

namespace {

struct Common {
    std::string mode = "tree";
    int k = 0;
    int w = 0;
    std::string input;
    std::string family;
};

Instance load_instance(const Common& c, Mode mode) {
    Instance in;
    if (uses_matroid(mode)) in.matroid = read_matroid(c.input);
    else in.graph = read_graph(c.input);
    if (mode == Mode::Custom) {
        if (c.family.empty()) throw UsageError("custom mode needs --family");
        in.custom_stars = family_from_json(parse_json(read_file(c.family), c.family));
    }
    return in;
}

int run_solve(const Common& c, const std::string& output) {
    Mode mode = parse_mode(c.mode);
    auto problem = build_problem(load_instance(c, mode), mode, c.k, c.w);
    auto sol = solve(problem);
    json out = witness_to_json(sol.witness);
    out["mode"] = mode_name(mode);
    out["k"] = c.k;
    if (mode == Mode::Adhesion) out["w"] = problem.w;
    if (auto obj = classical_object(problem, sol.witness); !obj.is_null()) out["classical"] = obj;
    if (sol.weak_fallback) out["weak_fallback"] = true;
    std::cout << "side=" << side_name(sol.witness.side) << " width_param=" << width_param(problem, sol.witness.side) << "\n";
    if (mode == Mode::Branch) {
        auto sum = branch_summary(*problem.graph);
        if (c.k <= 2)
            std::cout << "note: for k<=2 the side reports tangles of order k only; branch-width and tangle number "
                         "differ on disjoint unions of stars and isolated vertices\n";
        std::cout << "branch_width=" << sum.branch_width << " tangle_number=" << sum.tangle_number << "\n";
        out["branch_width"] = sum.branch_width;
        out["tangle_number"] = sum.tangle_number;
    }
    if (!output.empty()) write_file(output, out.dump(2) + "\n");
    return 0;
}

int run_verify(Common c, const std::string& witness_path) {
    json j = parse_json(read_file(witness_path), witness_path);
    if (c.k == 0) c.k = j.value("k", 0);
    if (c.mode.empty()) c.mode = j.value("mode", std::string("tree"));
    if (c.w == 0) c.w = j.value("w", 0);
    if (c.k <= 0) throw UsageError("k missing: pass -k or store it in the witness");
    Mode mode = parse_mode(c.mode);
    auto problem = build_problem(load_instance(c, mode), mode, c.k, c.w);
    auto w = witness_from_json(j);
    auto rep = verify_witness(w, *problem.family);
    if (rep.ok()) {
        std::cout << "valid " << side_name(w.side) << "\n";
        return 0;
    }
    for (const auto& p : rep.problems) std::cout << "violation: " << p << "\n";
    return 1;
}

struct Task {
    std::string instance;
    const Graph* graph;
    Mode mode;
    int k;
};

struct Row {
    std::string side;
    std::string value;
    bool verified = false;
    long long ms = 0;
    std::string note;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string csv_field(const std::string& s) { return s.find(',') == std::string::npos ? s : "\"" + s + "\""; }

Row run_task(const Task& t) {
    Row row;
    auto start = std::chrono::steady_clock::now();
    try {
        Instance in{*t.graph, std::nullopt, {}};
        int w = t.mode == Mode::Adhesion ? t.k + 1 : 0;
        auto problem = build_problem(in, t.mode, t.k, w);
        auto rep = verify_dichotomy(problem);
        row.side = side_name(rep.side);
        row.value = width_param(problem, rep.side);
        row.verified = rep.verified;
        if (!rep.problems.empty()) row.note = rep.problems.front();
    } catch (const std::exception& e) {
        row.side = "error";
        row.note = e.what();
    }
    row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return row;
}

std::string summary_svg(const std::vector<Task>& tasks, const std::vector<Row>& rows) {
    std::map<std::string, std::pair<int, int>> per_mode;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        auto& c = per_mode[mode_name(tasks[i].mode)];
        (rows[i].side == "tree" ? c.first : c.second) += 1;
    }
    int widest = 1;
    for (auto& [m, c] : per_mode) widest = std::max(widest, c.first + c.second);
    std::ostringstream svg;
    const int bar = 28, width = 640;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << 40 + bar * per_mode.size()
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<text x=\"10\" y=\"18\">tree side (blue) vs tangle side (orange) per mode</text>\n";
    int y = 30;
    for (auto& [m, c] : per_mode) {
        double scale = 480.0 / widest;
        int tw = static_cast<int>(c.first * scale), gw = static_cast<int>(c.second * scale);
        svg << "<text x=\"10\" y=\"" << y + 17 << "\">" << m << "</text>\n";
        svg << "<rect x=\"110\" y=\"" << y + 4 << "\" width=\"" << tw << "\" height=\"20\" fill=\"#4878a8\"/>\n";
        svg << "<rect x=\"" << 110 + tw << "\" y=\"" << y + 4 << "\" width=\"" << gw << "\" height=\"20\" fill=\"#e08030\"/>\n";
        svg << "<text x=\"" << 116 + tw + gw << "\" y=\"" << y + 17 << "\">" << c.first << "/" << c.second << "</text>\n";
        y += bar;
    }
    svg << "</svg>\n";
    return svg.str();
}

int run_suite(const std::string& modes_arg, int max_n, int matroid_edges, std::uint64_t seed, int random_count, int jobs, bool timing,
              const std::string& csv_path, const std::string& jsonl_path, const std::string& svg_path) {
    std::vector<Mode> modes;
    for (const auto& m : split(modes_arg, ',')) {
        Mode mode = parse_mode(m);
        if (mode == Mode::Custom) throw UsageError("the suite does not run custom families");
        modes.push_back(mode);
    }
    std::vector<NamedGraph> corpus = small_corpus(max_n);
    for (auto& g : random_corpus(seed, random_count, 6, 7)) corpus.push_back(std::move(g));
    for (auto& g : named_corpus())
        if (g.graph.n <= 7) corpus.push_back(std::move(g));

    std::vector<Task> tasks;
    for (const auto& ng : corpus)
        for (Mode m : modes) {
            if (m == Mode::MatroidTree && ng.graph.m() > std::min(matroid_edges, kBipartitionCap)) continue;
            int top = m == Mode::MatroidTree ? ng.graph.m() + 1 : ng.graph.n + 1;
            for (int k = 1; k <= top; ++k) tasks.push_back({ng.name, &ng.graph, m, k});
        }

    std::vector<Row> rows(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) rows[i] = run_task(tasks[i]);
    };
    if (jobs <= 0) jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::ostringstream csv, jsonl;
    csv << "instance,mode,k,side,value,verified,ms\n";
    int failures = 0;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const auto& t = tasks[i];
        const auto& r = rows[i];
        long long ms = timing ? r.ms : 0;
        if (!r.verified) ++failures;
        csv << t.instance << "," << mode_name(t.mode) << "," << t.k << "," << r.side << "," << csv_field(r.value) << ","
            << (r.verified ? "true" : "false") << "," << ms << "\n";
        json line{{"instance", t.instance}, {"mode", mode_name(t.mode)}, {"k", t.k}, {"side", r.side}, {"verified", r.verified}, {"ms", ms}};
        if (!r.note.empty()) line["problem"] = r.note;
        jsonl << line.dump() << "\n";
        if (!r.verified) std::cerr << "FAIL " << t.instance << " " << mode_name(t.mode) << " k=" << t.k << ": " << r.note << "\n";
    }
    if (!csv_path.empty()) write_file(csv_path, csv.str());
    else std::cout << csv.str();
    if (!jsonl_path.empty()) write_file(jsonl_path, jsonl.str());
    if (!svg_path.empty()) write_file(svg_path, summary_svg(tasks, rows));
    std::cerr << "suite: " << tasks.size() << " checks, " << failures << " failed\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tree-like decompositions versus tangles: solve, verify, and cross-check against brute force"};
    app.require_subcommand(1);

    Common solve_opts;
    std::string output;
    auto* solve_cmd = app.add_subcommand("solve", "Return an S-tree or a tangle for one instance");
    solve_cmd->add_option("--mode", solve_opts.mode, "branch|tree|path|adhesion|carving|rank|matroid-tree|custom")->required();
    solve_cmd->add_option("-k", solve_opts.k, "order bound k")->required()->check(CLI::PositiveNumber);
    solve_cmd->add_option("--input", solve_opts.input, "graph (JSON or DIMACS) or matroid JSON")->required();
    solve_cmd->add_option("--w", solve_opts.w, "width bound for adhesion mode (default k)");
    solve_cmd->add_option("--family", solve_opts.family, "explicit star family for custom mode");
    solve_cmd->add_option("--output", output, "witness JSON path");

    Common verify_opts;
    verify_opts.mode.clear();
    std::string witness;
    auto* verify_cmd = app.add_subcommand("verify", "Check a witness file against an instance");
    verify_cmd->add_option("--witness", witness, "witness JSON")->required();
    verify_cmd->add_option("--input", verify_opts.input, "instance file")->required();
    verify_cmd->add_option("--mode", verify_opts.mode, "defaults to the mode stored in the witness");
    verify_cmd->add_option("-k", verify_opts.k, "defaults to k stored in the witness");
    verify_cmd->add_option("--w", verify_opts.w);
    verify_cmd->add_option("--family", verify_opts.family);

    std::string modes = "tree,path,branch,adhesion,carving,rank,matroid-tree";
    int max_n = 5, random_count = 6, jobs = 0, matroid_edges = 12;
    std::uint64_t seed = 1;
    bool timing = false;
    std::string csv_path, jsonl_path, svg_path;
    auto* suite_cmd = app.add_subcommand("suite", "Cross-check the engine against brute force on a corpus");
    suite_cmd->add_option("--modes", modes, "comma-separated modes");
    suite_cmd->add_option("--max-n", max_n, "all graphs up to this many vertices (<= 6)")->check(CLI::Range(1, 6));
    suite_cmd->add_option("--matroid-max-edges", matroid_edges, "skip matroid mode on graphs with more edges");
    suite_cmd->add_option("--seed", seed, "seed for the random graphs");
    suite_cmd->add_option("--random", random_count, "number of random graphs on 6-7 vertices")->check(CLI::NonNegativeNumber);
    suite_cmd->add_option("--jobs", jobs, "worker threads (default: hardware)");
    suite_cmd->add_flag("--timing", timing, "record wall-clock ms (output is then not byte-stable)");
    suite_cmd->add_option("--csv", csv_path, "CSV report path (default stdout)");
    suite_cmd->add_option("--jsonl", jsonl_path, "JSON-lines report path");
    suite_cmd->add_option("--svg", svg_path, "summary plot path");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*solve_cmd) return run_solve(solve_opts, output);
        if (*verify_cmd) return run_verify(verify_opts, witness);
        if (*suite_cmd) return run_suite(modes, max_n, matroid_edges, seed, random_count, jobs, timing, csv_path, jsonl_path, svg_path);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
