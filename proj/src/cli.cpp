#include "mfr/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mfr/io.hpp"
#include "mfr/pipelines.hpp"

namespace mfr {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputArgs {
    std::string path;
    std::string discretize = "none";
    double quantum = 1.0;
    int max_dim = -1;
    bool unreduced = false;

    void add(CLI::App* sub) {
        sub->add_option("--input", path, "dataset file")->required();
        sub->add_option("--discretize", discretize, "accept real values and map them to integers")
            ->check(CLI::IsMember({"none", "rank-desc", "rank-asc", "scale"}));
        sub->add_option("--quantum", quantum, "bin width for --discretize scale");
        sub->add_option("--max-dim", max_dim, "highest homology degree of the complex (default: --dim)");
        sub->add_flag("--unreduced{true},--reduced{false}", unreduced, "use unreduced homology (default reduced)");
    }

    ChainComplex load(int dim, double* seconds = nullptr) const {
        std::optional<Discretization> disc;
        if (discretize == "rank-desc") disc = Discretization{Discretization::Mode::rank_desc};
        else if (discretize == "rank-asc") disc = Discretization{Discretization::Mode::rank_asc};
        else if (discretize == "scale") disc = Discretization{Discretization::Mode::scale, quantum};
        const int md = max_dim < 0 ? dim : max_dim;
        if (md < dim) throw UsageError("--max-dim must be at least --dim");
        auto ds = parse_input(path, disc);
        auto t0 = std::chrono::steady_clock::now();
        auto c = to_chain_complex(build_function_rips(ds.distances, ds.values, md, !unreduced));
        if (seconds) *seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return c;
    }
};

struct PipelineArgs {
    std::string algorithm = "cohomology";
    std::string chunk = "default";
    std::string columns = "heap";
    std::string cone = "x";
    bool no_clearing = false, no_sparsify = false, no_minimize = false;
    unsigned threads = 1;

    void add(CLI::App* sub) {
        sub->add_option("--algorithm", algorithm)->check(CLI::IsMember({"cohomology", "homology"}));
        sub->add_option("--chunk", chunk, "default: none for cohomology, chain for homology")
            ->check(CLI::IsMember({"default", "none", "chain", "cochain"}));
        sub->add_option("--columns", columns)->check(CLI::IsMember({"heap", "vector"}));
        sub->add_option("--cone", cone)->check(CLI::IsMember({"x", "y", "none"}));
        sub->add_flag("--no-clearing", no_clearing);
        sub->add_flag("--no-sparsify", no_sparsify);
        sub->add_flag("--no-minimize", no_minimize);
        sub->add_option("--threads", threads)->check(CLI::Range(1u, 1024u));
    }

    PipelineOptions options() const {
        if (algorithm == "homology" && (no_clearing || no_sparsify))
            throw UsageError("--no-clearing and --no-sparsify only apply to --algorithm cohomology");
        PipelineOptions o;
        o.columns = parse_column_kind(columns);
        std::string ch = chunk == "default" ? (algorithm == "homology" ? "chain" : "none") : chunk;
        o.chunk = ch == "chain" ? Chunk::chain : ch == "cochain" ? Chunk::cochain : Chunk::none;
        o.clearing = !no_clearing;
        o.sparsify = !no_sparsify;
        o.minimize = !no_minimize;
        if (cone != "none") o.cone = cone == "x" ? Axis::x : Axis::y;
        o.threads = threads;
        return o;
    }
    std::string chunk_name() const {
        return chunk == "default" ? (algorithm == "homology" ? "chain" : "none") : chunk;
    }
};

FreeResolution run_pipeline(const ChainComplex& c, int d, const std::string& algorithm, const PipelineOptions& o,
                            PipelineStats* st) {
    if (algorithm == "homology") return homology_mfr(c, d, o, st);
    return cohomology_mfr(c, d, o, st).back();
}

RunRecord record(const std::string& input, int d, const PipelineArgs& pa, const PipelineOptions& o,
                 const FreeResolution& r) {
    RunRecord rec;
    rec.input = input;
    rec.algorithm = pa.algorithm;
    rec.chunk = pa.chunk_name();
    rec.columns = pa.columns;
    rec.degree = d;
    rec.clearing = o.clearing;
    rec.threads = o.threads;
    rec.beta0 = r.f0().size();
    rec.beta1 = r.f1().size();
    rec.beta2 = r.f2().size();
    return rec;
}

void print_betti(std::ostream& out, const BettiDiagram& b) {
    const std::vector<Grade>* lists[3] = {&b.b0, &b.b1, &b.b2};
    for (int q = 0; q < 3; ++q) {
        out << "beta" << q << ':';
        for (const auto& g : *lists[q]) out << ' ' << g;
        out << '\n';
    }
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"minimal free resolutions of function-Rips bifiltrations"};
    app.require_subcommand(1);

    int dim = 0;
    InputArgs in;
    PipelineArgs pa;
    std::string output, stats_path;
    auto* compute = app.add_subcommand("compute", "compute a minimal free resolution of H_d");
    compute->add_option("--dim", dim)->required()->check(CLI::NonNegativeNumber);
    in.add(compute);
    pa.add(compute);
    compute->add_option("--output", output, "resolution file (default stdout)");
    compute->add_option("--stats", stats_path, "append a CSV stats row");

    auto* verify = app.add_subcommand("verify", "compare both pipelines and the rank oracle");
    verify->add_option("--dim", dim)->required()->check(CLI::NonNegativeNumber);
    std::string vcolumns = "heap", vcone = "x";
    in.add(verify);
    verify->add_option("--columns", vcolumns)->check(CLI::IsMember({"heap", "vector"}));
    verify->add_option("--cone", vcone)->check(CLI::IsMember({"x", "y"}));

    auto* hilbert = app.add_subcommand("hilbert", "print dim H_d over a grade box");
    hilbert->add_option("--dim", dim)->required()->check(CLI::NonNegativeNumber);
    std::vector<int> box;
    bool use_oracle = false;
    in.add(hilbert);
    pa.add(hilbert);
    hilbert->add_option("--box", box, "x0 y0 x1 y1")->expected(4)->required();
    hilbert->add_flag("--oracle", use_oracle, "use plain rank computations instead of a resolution");

    auto* gen = app.add_subcommand("gen", "sample a dataset");
    std::string shape, gen_out;
    Index n = 0;
    double sigma = 0;
    std::uint64_t seed = 0;
    gen->add_option("--shape", shape)->required()->check(CLI::IsMember({"circle", "sphere", "torus", "random"}));
    gen->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    gen->add_option("--sigma", sigma)->required();
    gen->add_option("--seed", seed)->required();
    gen->add_option("--out", gen_out)->required();

    auto* bench = app.add_subcommand("bench", "time both pipelines on each input");
    std::vector<std::string> bench_inputs;
    std::string csv;
    int bench_dim = 1, bench_max = -1;
    std::string bench_columns = "heap";
    unsigned bench_threads = 1;
    bench->add_option("--input", bench_inputs)->required()->expected(1, -1);
    bench->add_option("--csv", csv)->required();
    bench->add_option("--dim", bench_dim)->check(CLI::NonNegativeNumber);
    bench->add_option("--max-dim", bench_max);
    bench->add_option("--columns", bench_columns)->check(CLI::IsMember({"heap", "vector"}));
    bench->add_option("--threads", bench_threads)->check(CLI::Range(1u, 1024u));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*compute) {
            RunRecord rec;
            auto c = in.load(dim, &rec.seconds_build);
            auto o = pa.options();
            PipelineStats st;
            auto r = run_pipeline(c, dim, pa.algorithm, o, &st);
            if (output.empty()) write_resolution(out, r);
            else write_resolution(output, r);
            if (!stats_path.empty()) {
                double build = rec.seconds_build;
                rec = record(in.path, dim, pa, o, r);
                rec.seconds_build = build;
                rec.stats = st;
                bool fresh = !std::ifstream(stats_path).good();
                std::ofstream f(stats_path, std::ios::app);
                if (!f) throw std::runtime_error("cannot open " + stats_path);
                if (fresh) write_stats_header(f);
                write_stats_row(f, rec);
            }
            return 0;
        }
        if (*verify) {
            auto c = in.load(dim);
            PipelineOptions o;
            o.columns = parse_column_kind(vcolumns);
            o.cone = vcone == "x" ? Axis::x : Axis::y;
            const auto coned = cone_off(c, *o.cone);
            o.cone.reset();
            o.chunk = Chunk::chain;
            auto rh = homology_mfr(coned, dim, o);
            o.chunk = Chunk::none;
            auto rc = cohomology_mfr(coned, dim, o).back();
            auto bh = betti(rh), bc = betti(rc);
            auto bx = bounding_box(coned);
            bool ok = bh == bc;
            if (!ok) {
                err << "betti mismatch\nhomology:\n";
                print_betti(err, bh);
                err << "cohomology:\n";
                print_betti(err, bc);
            }
            auto oracle = hilbert_oracle(coned, dim, bx);
            if (hilbert_from_resolution(rh, bx) != oracle || hilbert_from_resolution(rc, bx) != oracle) {
                err << "hilbert function differs from the rank oracle\n";
                ok = false;
            }
            if (ok) {
                out << "ok\n";
                print_betti(out, bh);
            }
            return ok ? 0 : 1;
        }
        if (*hilbert) {
            GradeBox bx{{box[0], box[1]}, {box[2], box[3]}};
            if (bx.lo.x > bx.hi.x || bx.lo.y > bx.hi.y) throw UsageError("--box must satisfy x0 <= x1 and y0 <= y1");
            auto c = in.load(dim);
            auto o = pa.options();
            HilbertGrid h;
            if (use_oracle) {
                if (o.cone) c = cone_off(c, *o.cone);
                h = hilbert_oracle(c, dim, bx);
            } else {
                h = hilbert_from_resolution(run_pipeline(c, dim, pa.algorithm, o, nullptr), bx);
            }
            for (std::int32_t x = bx.lo.x; x <= bx.hi.x; ++x)
                for (std::int32_t y = bx.lo.y; y <= bx.hi.y; ++y) out << x << ' ' << y << ' ' << h.at({x, y}) << '\n';
            return 0;
        }
        if (*gen) {
            write_dataset(gen_out, generate_dataset(parse_shape(shape), n, sigma, seed));
            return 0;
        }
        if (*bench) {
            std::ofstream f(csv);
            if (!f) throw std::runtime_error("cannot open " + csv);
            write_stats_header(f);
            for (const auto& path : bench_inputs) {
                InputArgs bin;
                bin.path = path;
                bin.max_dim = bench_max;
                for (const char* alg : {"cohomology", "homology"}) {
                    PipelineArgs bpa;
                    bpa.algorithm = alg;
                    bpa.columns = bench_columns;
                    bpa.threads = bench_threads;
                    double build = 0;
                    auto c = bin.load(bench_dim, &build);
                    auto o = bpa.options();
                    PipelineStats st;
                    auto t0 = std::chrono::steady_clock::now();
                    auto r = run_pipeline(c, bench_dim, alg, o, &st);
                    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                    auto rec = record(path, bench_dim, bpa, o, r);
                    rec.seconds_build = build;
                    rec.stats = st;
                    write_stats_row(f, rec);
                    out << path << ' ' << alg << " d=" << bench_dim << ' ' << total << "s betti " << rec.beta0 << ' '
                        << rec.beta1 << ' ' << rec.beta2 << '\n';
                }
            }
            return 0;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}

} // namespace mfr
