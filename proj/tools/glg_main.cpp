#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "glg/glg.hpp"

namespace {

// Exit codes are a stable contract: 0 success or likely-isomorphic,
// 1 certified non-isomorphic, 2 usage or parse failure, 3 step cap hit.
constexpr int kExitOk = 0;
constexpr int kExitNonIsomorphic = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

glg::GameParams parse_params(const std::string& text) {
    int vals[3];
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t used = 0;
        vals[i] = std::stoi(text.substr(pos), &used);
        if (vals[i] < 0) throw std::invalid_argument("params: counts must be >= 0");
        pos += used;
        if (i < 2) {
            if (pos >= text.size() || text[pos] != ',')
                throw std::invalid_argument("params: expected \"a,d,r\"");
            ++pos;
        }
    }
    if (pos != text.size()) throw std::invalid_argument("params: expected \"a,d,r\"");
    return {vals[0], vals[1], vals[2]};
}

// Accepts "12", "3,7,12", and "1..60" (inclusive), or comma-joined mixes.
std::vector<long> parse_edge_counts(const std::string& text) {
    std::vector<long> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? comma : comma - start);
        if (piece.empty()) throw std::invalid_argument("m: empty item in list");
        std::size_t dots = piece.find("..");
        if (dots == std::string::npos) {
            out.push_back(std::stol(piece));
        } else {
            long lo = std::stol(piece.substr(0, dots));
            long hi = std::stol(piece.substr(dots + 2));
            if (lo > hi) throw std::invalid_argument("m: descending range");
            for (long m = lo; m <= hi; ++m) out.push_back(m);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("m: no edge counts given");
    for (long m : out)
        if (m < 0) throw std::invalid_argument("m: edge counts must be >= 0");
    return out;
}

std::string format_pattern(const glg::LifePattern& p) {
    std::string out = "{";
    bool first = true;
    for (int v : p.to_indices()) {
        if (!first) out += ' ';
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

// Opens --out or falls back to stdout.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw std::runtime_error("cannot write file: " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

struct SimulateArgs {
    std::string graph_path;
    int seed_vertex = 0;
    std::string params = "1,1,1";
    int cap = 0;
    bool quiet = false;
};

int cmd_simulate(const SimulateArgs& a) {
    const glg::Graph g = glg::load_single_graph(a.graph_path);
    if (a.seed_vertex < 0 || a.seed_vertex >= g.n())
        throw std::invalid_argument("seed vertex out of range");
    const glg::GameParams params = parse_params(a.params);
    const int cap = a.cap > 0 ? a.cap : glg::default_cap(g.n());
    const glg::Trajectory tr =
        glg::simulate(g, glg::single_vertex_pattern(g.n(), a.seed_vertex), params, cap);

    if (!a.quiet)
        for (std::size_t t = 0; t < tr.patterns.size(); ++t)
            std::cout << "t=" << t << ": " << format_pattern(tr.patterns[t]) << '\n';
    if (tr.outcome == glg::Outcome::Cycled)
        std::cout << "complexity=" << tr.complexity << " outcome=cycled entry=" << tr.cycle_entry
                  << " repeat_at=" << tr.repeat_at << '\n';
    else
        std::cout << "complexity=" << tr.complexity << " outcome=died t=" << tr.died_at << '\n';
    return kExitOk;
}

struct FeaturesArgs {
    std::string graph_path;
    int k = 2;
    bool normalize = false;
    std::string out_path;
};

int cmd_features(const FeaturesArgs& a) {
    const auto graphs = glg::load_graphs(a.graph_path);
    OutputTarget out(a.out_path);
    for (const glg::Graph& g : graphs)
        out.stream() << glg::extract_features(g, a.k, a.normalize).serialize() << '\n';
    return kExitOk;
}

struct IsoArgs {
    std::string g_path;
    std::string h_path;
    int k = 2;
};

int cmd_iso(const IsoArgs& a) {
    const glg::Graph g = glg::load_single_graph(a.g_path);
    const glg::Graph h = glg::load_single_graph(a.h_path);
    const glg::IsoVerdict verdict = glg::test_isomorphism(g, h, a.k);
    if (verdict.non_isomorphic()) {
        std::cout << "non-isomorphic step=" << verdict.step << '\n';
        return kExitNonIsomorphic;
    }
    std::cout << "likely-isomorphic\n";
    return kExitOk;
}

struct ScanArgs {
    std::string corpus_path;
    int k = 2;
    int threads = 0;
};

int cmd_scan(const ScanArgs& a) {
    const auto corpus = glg::load_graphs(a.corpus_path);
    const glg::ScanReport report =
        glg::collision_scan(corpus, a.k, glg::resolve_thread_count(a.threads));
    std::cout << "graphs=" << report.total << " k=" << report.k << " groups=" << report.group_count
              << " collisions=" << report.collision_count << '\n';
    for (const auto& group : report.colliding_groups) {
        std::cout << "collision:";
        for (std::size_t idx : group) std::cout << ' ' << glg::encode_graph6(corpus[idx]);
        std::cout << '\n';
    }
    return kExitOk;
}

struct DistanceArgs {
    std::string g_path;
    std::string h_path;
    int k = 2;
    bool normalize = false;
};

int cmd_distance(const DistanceArgs& a) {
    const glg::Graph g = glg::load_single_graph(a.g_path);
    const glg::Graph h = glg::load_single_graph(a.h_path);
    std::cout << glg::format_double(glg::glg_distance(g, h, a.k, a.normalize)) << '\n';
    return kExitOk;
}

struct LinesArgs {
    std::string corpus_path;
    int k = 2;
    bool normalize = false;
    double tol = 1e-9;
    int threads = 0;
    std::string out_path;
    bool exact_only = false;
    int max_n = 6;
};

int cmd_lines(const LinesArgs& a) {
    const auto corpus = glg::load_graphs(a.corpus_path);
    const auto triples = glg::find_lines(corpus, a.k, a.normalize, a.tol,
                                         glg::resolve_thread_count(a.threads), a.max_n);
    OutputTarget out(a.out_path);
    out.stream() << "i_graph6,j_graph6,mid_graph6,d_ij,d_i_mid,d_j_mid,residual,exact\n";
    for (const glg::LineTriple& t : triples) {
        if (a.exact_only && !t.exact) continue;
        out.stream() << glg::encode_graph6(corpus[t.i]) << ',' << glg::encode_graph6(corpus[t.j])
                     << ',' << glg::encode_graph6(corpus[t.mid]) << ','
                     << glg::format_double(t.d_ij) << ',' << glg::format_double(t.d_i_mid) << ','
                     << glg::format_double(t.d_j_mid) << ',' << glg::format_double(t.residual)
                     << ',' << (t.exact ? 1 : 0) << '\n';
    }
    return kExitOk;
}

struct PhaseArgs {
    std::string corpus_path;
    int n = 0;
    std::string m_spec;
    int samples = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string params = "1,1,1";
    int cap = 0;
    int threads = 0;
    std::string out_path;
    bool per_graph_totals = false;
};

int cmd_phase(const PhaseArgs& a) {
    const glg::GameParams params = parse_params(a.params);
    const int threads = glg::resolve_thread_count(a.threads);
    std::vector<glg::DensityRecord> records;
    bool has_seed = false;
    int n = 0;

    if (!a.corpus_path.empty()) {
        if (a.n != 0 || !a.m_spec.empty() || a.samples != 0 || a.seed_given)
            throw std::invalid_argument("phase: --corpus excludes --n/--m/--samples/--seed");
        const auto corpus = glg::load_graphs(a.corpus_path);
        if (corpus.empty()) throw std::invalid_argument("phase: empty corpus");
        n = corpus.front().n();
        records = glg::exhaustive_complexity(corpus, params, a.cap, threads);
    } else {
        if (a.n < 1 || a.m_spec.empty() || a.samples < 1)
            throw std::invalid_argument(
                "phase: either --corpus or all of --n/--m/--samples are required");
        n = a.n;
        records = glg::random_ensemble(a.n, parse_edge_counts(a.m_spec), a.samples, a.seed,
                                       params, a.cap, threads);
        has_seed = true;
    }

    OutputTarget out(a.out_path);
    glg::write_density_csv(out.stream(), records, params, has_seed, a.seed,
                           a.per_graph_totals ? n : 1);
    return kExitOk;
}

struct ConwayArgs {
    std::string pattern = "blinker";
    std::string grid = "5x5";
    int max_steps = 4096;
};

// Cell lists use (column x, row y); vertex index is y * width + x.
std::vector<std::pair<int, int>> named_pattern(const std::string& name) {
    if (name == "block") return {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    if (name == "blinker") return {{0, 0}, {1, 0}, {2, 0}};
    if (name == "glider") return {{1, 0}, {2, 1}, {0, 2}, {1, 2}, {2, 2}};
    throw std::invalid_argument("unknown pattern: " + name +
                                " (expected block, blinker, or glider)");
}

int cmd_conway(const ConwayArgs& a) {
    const std::size_t sep = a.grid.find('x');
    if (sep == std::string::npos) throw std::invalid_argument("grid: expected WxH");
    const int width = std::stoi(a.grid.substr(0, sep));
    const int height = std::stoi(a.grid.substr(sep + 1));
    const glg::Graph torus = glg::make_grid(width, height, true);
    const glg::GameParams life{2, 5, 3};

    glg::LifePattern start(width * height);
    for (auto [x, y] : named_pattern(a.pattern)) {
        if (x >= width || y >= height)
            throw std::invalid_argument("pattern does not fit on the grid");
        start.set(y * width + x);
    }

    const auto translate = [&](const glg::LifePattern& p, int dx, int dy) {
        glg::LifePattern q(width * height);
        for (int v : p.to_indices()) {
            const int x = (v % width + dx) % width;
            const int y = (v / width + dy) % height;
            q.set(y * width + x);
        }
        return q;
    };

    glg::LifePattern cur = start;
    int translation_step = 0, translation_dx = 0, translation_dy = 0;
    for (int t = 1; t <= a.max_steps; ++t) {
        cur = glg::step(torus, cur, life);
        if (cur.none()) {
            std::cout << "died t=" << t << '\n';
            return kExitOk;
        }
        if (cur == start) {
            std::cout << "period=" << t;
            if (translation_step > 0 && translation_step < t)
                std::cout << " translation_period=" << translation_step << " offset=("
                          << translation_dx << ',' << translation_dy << ')';
            std::cout << '\n';
            return kExitOk;
        }
        if (translation_step == 0) {
            for (int dy = 0; dy < height && translation_step == 0; ++dy)
                for (int dx = 0; dx < width; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    if (cur == translate(start, dx, dy)) {
                        translation_step = t;
                        translation_dx = dx;
                        translation_dy = dy;
                        break;
                    }
                }
        }
    }
    throw glg::CapExceededError(a.max_steps, "pattern=" + a.pattern + " grid=" + a.grid);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Game of Life on Graphs: dynamics, features, isomorphism, metric, experiments"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* c_sim = app.add_subcommand("simulate", "Run one game and print its trajectory");
    c_sim->add_option("--graph", sim.graph_path, "graph6 or edge-list file with one graph")
        ->required();
    c_sim->add_option("--seed", sim.seed_vertex, "seed vertex index")->required();
    c_sim->add_option("--params", sim.params, "rule counts a,d,r (default 1,1,1)");
    c_sim->add_option("--cap", sim.cap, "step cap (default 2^n+1, capped at 10^6)");
    c_sim->add_flag("--quiet", sim.quiet, "suppress the per-step pattern lines");

    FeaturesArgs feat;
    auto* c_feat = app.add_subcommand("features", "Print feature vectors, one line per graph");
    c_feat->add_option("--graph", feat.graph_path, "graph6 or edge-list file")->required();
    c_feat->add_option("--k", feat.k, "number of steps (default 2)");
    c_feat->add_flag("--normalize", feat.normalize, "emit normalized labels");
    c_feat->add_option("--out", feat.out_path, "output file (default stdout)");

    IsoArgs iso;
    auto* c_iso = app.add_subcommand("iso", "Heuristic isomorphism test for two graphs");
    c_iso->set_help_flag("--help", "print help"); // frees -h for the --h option below
    c_iso->add_option("--g", iso.g_path, "first graph file")->required();
    c_iso->add_option("--h", iso.h_path, "second graph file")->required();
    c_iso->add_option("--k", iso.k, "number of steps (default 2)");

    ScanArgs scan;
    auto* c_scan = app.add_subcommand("scan", "Group a corpus by feature vector collisions");
    c_scan->add_option("--corpus", scan.corpus_path, "graph6 file, one record per line")
        ->required();
    c_scan->add_option("--k", scan.k, "number of steps (default 2)");
    c_scan->add_option("--threads", scan.threads, "worker count (default GLG_THREADS or cores)");

    DistanceArgs dist;
    auto* c_dist = app.add_subcommand("distance", "Euclidean distance between feature vectors");
    c_dist->set_help_flag("--help", "print help"); // frees -h for the --h option below
    c_dist->add_option("--g", dist.g_path, "first graph file")->required();
    c_dist->add_option("--h", dist.h_path, "second graph file")->required();
    c_dist->add_option("--k", dist.k, "number of steps (default 2)");
    c_dist->add_flag("--normalize", dist.normalize, "use normalized feature vectors");

    LinesArgs lines;
    auto* c_lines = app.add_subcommand("lines", "Find triangle-equality triples in a corpus");
    c_lines->add_option("--corpus", lines.corpus_path, "graph6 file, one record per line")
        ->required();
    c_lines->add_option("--k", lines.k, "number of steps (default 2)");
    c_lines->add_flag("--normalize", lines.normalize, "use normalized feature vectors");
    c_lines->add_option("--tol", lines.tol, "relative residual tolerance (default 1e-9)");
    c_lines->add_option("--threads", lines.threads, "worker count");
    c_lines->add_option("--out", lines.out_path, "output CSV file (default stdout)");
    c_lines->add_flag("--exact-only", lines.exact_only,
                      "keep only integer-certified collinear triples");
    c_lines->add_option("--max-n", lines.max_n,
                        "vertex-count guard for the cubic scan (default 6)");

    PhaseArgs phase;
    auto* c_phase = app.add_subcommand("phase", "Complexity and halting sweeps over densities");
    c_phase->add_option("--corpus", phase.corpus_path, "exhaustive sweep over this graph6 file");
    c_phase->add_option("--n", phase.n, "random sweep: vertex count");
    c_phase->add_option("--m", phase.m_spec, "random sweep: edge counts, e.g. 1..60 or 5,10");
    c_phase->add_option("--samples", phase.samples, "random sweep: graphs per edge count");
    c_phase->add_option("--seed", phase.seed, "random sweep: base RNG seed")
        ->trigger_on_parse()
        ->each([&phase](const std::string&) { phase.seed_given = true; });
    c_phase->add_option("--params", phase.params, "rule counts a,d,r (default 1,1,1)");
    c_phase->add_option("--cap", phase.cap, "step cap override");
    c_phase->add_option("--threads", phase.threads, "worker count");
    c_phase->add_option("--out", phase.out_path, "output CSV file (default stdout)");
    c_phase->add_flag("--per-graph-totals", phase.per_graph_totals,
                      "emit per-graph complexity totals instead of per-game means");

    ConwayArgs conway;
    auto* c_conway = app.add_subcommand("conway", "Run a named Life pattern on a torus grid");
    c_conway->add_option("--pattern", conway.pattern, "block, blinker, or glider");
    c_conway->add_option("--grid", conway.grid, "grid size WxH (default 5x5)");
    c_conway->add_option("--max-steps", conway.max_steps, "recurrence search cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c_sim->parsed()) return cmd_simulate(sim);
        if (c_feat->parsed()) return cmd_features(feat);
        if (c_iso->parsed()) return cmd_iso(iso);
        if (c_scan->parsed()) return cmd_scan(scan);
        if (c_dist->parsed()) return cmd_distance(dist);
        if (c_lines->parsed()) return cmd_lines(lines);
        if (c_phase->parsed()) return cmd_phase(phase);
        if (c_conway->parsed()) return cmd_conway(conway);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const glg::CapExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCapExceeded;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
