#include "mfr/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>

namespace mfr {

namespace {

// Non-blank, non-comment lines with their 1-based line numbers.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& line) {
        while (std::getline(in_, line)) {
            ++number_;
            auto p = line.find_first_not_of(" \t\r");
            if (p == std::string::npos || line[p] == '#') continue;
            return true;
        }
        return false;
    }
    int number() const { return number_; }

private:
    std::istream& in_;
    int number_ = 0;
};

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string t; ss >> t;) out.push_back(t);
    return out;
}

bool parse_double(const std::string& s, double& v) {
    std::size_t used = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        return false;
    }
    return used == s.size();
}

bool parse_int(const std::string& s, long long& v) {
    std::size_t used = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        return false;
    }
    return used == s.size();
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    return f;
}

} // namespace

InputDataset read_dataset(std::istream& in, std::optional<Discretization> disc) {
    LineReader lr(in);
    std::string line;
    if (!lr.next(line) || tokens(line) != std::vector<std::string>{"function-rips"})
        throw ParseError(lr.number(), "expected header 'function-rips'");
    long long n = 0;
    {
        if (!lr.next(line)) throw ParseError(lr.number(), "missing point count");
        auto t = tokens(line);
        if (t.size() != 1 || !parse_int(t[0], n) || n < 0) throw ParseError(lr.number(), "bad point count");
    }
    InputDataset ds;
    if (n > 0) {
        if (!lr.next(line)) throw ParseError(lr.number(), "missing function values");
        auto t = tokens(line);
        if (std::ssize(t) != n)
            throw ParseError(lr.number(), "expected " + std::to_string(n) + " values, got " + std::to_string(t.size()));
        std::vector<double> reals;
        for (const auto& s : t) {
            long long iv;
            double dv;
            if (!disc && parse_int(s, iv)) {
                if (iv < INT32_MIN || iv > INT32_MAX) throw ParseError(lr.number(), "value out of range: " + s);
                ds.values.push_back(std::int32_t(iv));
            } else if (parse_double(s, dv) && std::isfinite(dv)) {
                if (!disc)
                    throw ParseError(lr.number(), "non-integer value '" + s + "' (use --discretize)");
                reals.push_back(dv);
            } else {
                throw ParseError(lr.number(), "bad value '" + s + "'");
            }
        }
        if (disc) ds.values = discretize_values(reals, *disc);
    }
    std::vector<double> lower;
    for (long long i = 1; i < n; ++i) {
        if (!lr.next(line)) throw ParseError(lr.number(), "missing distance row " + std::to_string(i + 1));
        auto t = tokens(line);
        if (std::ssize(t) != i)
            throw ParseError(lr.number(), "distance row " + std::to_string(i + 1) + " needs " + std::to_string(i) +
                                              " entries, got " + std::to_string(t.size()));
        for (const auto& s : t) {
            double d;
            if (!parse_double(s, d) || !std::isfinite(d) || d < 0)
                throw ParseError(lr.number(), "bad distance '" + s + "'");
            lower.push_back(d);
        }
    }
    if (lr.next(line)) throw ParseError(lr.number(), "trailing content");
    ds.distances = DistanceMatrix(Index(n), std::move(lower));
    return ds;
}

InputDataset parse_input(const std::string& path, std::optional<Discretization> disc) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_dataset(f, disc);
}

void write_dataset(std::ostream& out, const InputDataset& ds) {
    const Index n = ds.size();
    out << "function-rips\n" << n << '\n';
    for (Index i = 0; i < n; ++i) out << (i ? " " : "") << ds.values[i];
    if (n) out << '\n';
    out << std::setprecision(17);
    for (Index i = 1; i < n; ++i) {
        for (Index j = 0; j < i; ++j) out << (j ? " " : "") << ds.distances(i, j);
        out << '\n';
    }
}

void write_dataset(const std::string& path, const InputDataset& ds) {
    auto f = open_out(path);
    write_dataset(f, ds);
}

void write_resolution(std::ostream& out, const FreeResolution& r) {
    auto order = [](const std::vector<Grade>& g) {
        std::vector<Index> o(g.size());
        std::iota(o.begin(), o.end(), 0);
        std::stable_sort(o.begin(), o.end(), [&](Index a, Index b) { return colex_less(g[a], g[b]); });
        std::vector<Index> pos(g.size());
        for (Index k = 0; k < Index(o.size()); ++k) pos[o[k]] = k;
        return std::pair{o, pos};
    };
    auto [o0, p0] = order(r.f0());
    auto [o1, p1] = order(r.f1());
    auto [o2, p2] = order(r.f2());
    (void)p2;
    out << "mfr 2\ndegree " << r.degree << '\n';
    out << "F0 " << o0.size() << '\n';
    for (Index k : o0) out << r.f0()[k].x << ' ' << r.f0()[k].y << '\n';
    auto block = [&](const char* name, const GradedMatrix& m, const std::vector<Index>& cols,
                     const std::vector<Index>& rowpos) {
        out << name << ' ' << cols.size() << '\n';
        for (Index j : cols) {
            out << m.col_grades[j].x << ' ' << m.col_grades[j].y << " :";
            std::vector<Index> rows;
            for (Index i : m.columns[j]) rows.push_back(rowpos[i]);
            std::sort(rows.begin(), rows.end());
            for (Index i : rows) out << ' ' << i;
            out << '\n';
        }
    };
    block("F1", r.u1, o1, p0);
    block("F2", r.u2, o2, p1);
}

void write_resolution(const std::string& path, const FreeResolution& r) {
    auto f = open_out(path);
    write_resolution(f, r);
}

std::string resolution_to_string(const FreeResolution& r) {
    std::ostringstream ss;
    write_resolution(ss, r);
    return ss.str();
}

FreeResolution read_resolution(std::istream& in) {
    LineReader lr(in);
    std::string line;
    auto expect = [&](const std::string& key) {
        if (!lr.next(line)) throw ParseError(lr.number(), "missing '" + key + "'");
        auto t = tokens(line);
        long long v;
        if (t.size() != 2 || t[0] != key || !parse_int(t[1], v)) throw ParseError(lr.number(), "expected '" + key + " <n>'");
        return v;
    };
    if (expect("mfr") != 2) throw ParseError(lr.number(), "unsupported version");
    FreeResolution r;
    r.degree = int(expect("degree"));
    auto grade_of = [&](const std::vector<std::string>& t) {
        long long x, y;
        if (t.size() < 2 || !parse_int(t[0], x) || !parse_int(t[1], y)) throw ParseError(lr.number(), "bad grade");
        return Grade{std::int32_t(x), std::int32_t(y)};
    };
    std::vector<Grade> f0;
    for (long long k = expect("F0"); k > 0; --k) {
        if (!lr.next(line)) throw ParseError(lr.number(), "truncated F0");
        f0.push_back(grade_of(tokens(line)));
    }
    auto matrix = [&](const char* key, std::vector<Grade> rows) {
        GradedMatrix m;
        m.row_grades = std::move(rows);
        for (long long k = expect(key); k > 0; --k) {
            if (!lr.next(line)) throw ParseError(lr.number(), std::string("truncated ") + key);
            auto t = tokens(line);
            m.col_grades.push_back(grade_of(t));
            if (t.size() < 3 || t[2] != ":") throw ParseError(lr.number(), "expected ':'");
            SparseColumn col;
            for (std::size_t i = 3; i < t.size(); ++i) {
                long long v;
                if (!parse_int(t[i], v) || v < 0 || v >= m.num_rows() || (!col.empty() && v <= col.back()))
                    throw ParseError(lr.number(), "bad row index '" + t[i] + "'");
                col.push_back(Index(v));
            }
            m.columns.push_back(std::move(col));
        }
        return m;
    };
    r.u1 = matrix("F1", std::move(f0));
    r.u2 = matrix("F2", r.u1.col_grades);
    r.minimal = is_minimal(r.u1) && is_minimal(r.u2);
    return r;
}

Shape parse_shape(const std::string& s) {
    if (s == "circle") return Shape::circle;
    if (s == "sphere") return Shape::sphere;
    if (s == "torus") return Shape::torus;
    if (s == "random") return Shape::random;
    throw std::invalid_argument("unknown shape '" + s + "'");
}

InputDataset generate_dataset(Shape shape, Index n, double sigma, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("need at least one point");
    if (!(sigma > 0)) throw std::invalid_argument("sigma must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> normal(0.0, 1.0);
    const double tau = 2 * std::acos(-1.0);
    std::vector<std::vector<double>> pts;
    for (Index i = 0; i < n; ++i) {
        switch (shape) {
        case Shape::circle: {
            double t = tau * unit(rng);
            pts.push_back({std::cos(t), std::sin(t)});
            break;
        }
        case Shape::sphere: {
            std::vector<double> p;
            double norm = 0;
            do {
                p = {normal(rng), normal(rng), normal(rng)};
                norm = std::hypot(p[0], p[1], p[2]);
            } while (norm < 1e-12);
            for (auto& c : p) c /= norm;
            pts.push_back(p);
            break;
        }
        case Shape::torus: { // product of two unit circles in R^4
            double s = tau * unit(rng), t = tau * unit(rng);
            pts.push_back({std::cos(s), std::sin(s), std::cos(t), std::sin(t)});
            break;
        }
        case Shape::random:
            pts.push_back({unit(rng), unit(rng), unit(rng)});
            break;
        }
    }
    std::vector<double> lower;
    for (Index i = 1; i < n; ++i)
        for (Index j = 0; j < i; ++j) {
            double s = 0;
            for (std::size_t c = 0; c < pts[i].size(); ++c) s += (pts[i][c] - pts[j][c]) * (pts[i][c] - pts[j][c]);
            lower.push_back(std::sqrt(s));
        }
    InputDataset ds;
    ds.distances = DistanceMatrix(n, std::move(lower));
    ds.values = discretize_values(gaussian_density(ds.distances, sigma), {Discretization::Mode::rank_desc});
    return ds;
}

void write_stats_header(std::ostream& out) {
    out << "input,algorithm,degree,chunk,columns,clearing,threads,seconds_build,seconds_cone,seconds_chunk,"
           "seconds_reduce,seconds_minimize,seconds_dualize,phase1_columns,phase1_additions,phase2_additions,"
           "cleared_columns,lw_additions,peak_columns,beta0,beta1,beta2\n";
}

void write_stats_row(std::ostream& out, const RunRecord& r) {
    const auto& s = r.stats;
    out << r.input << ',' << r.algorithm << ',' << r.degree << ',' << r.chunk << ',' << r.columns << ','
        << (r.clearing ? 1 : 0) << ',' << r.threads << ',' << r.seconds_build << ',' << s.seconds_cone << ','
        << s.seconds_chunk << ',' << s.seconds_reduce << ',' << s.seconds_minimize << ',' << s.seconds_dualize << ','
        << s.phase1_columns << ',' << s.phase1_additions << ',' << s.phase2_additions << ',' << s.cleared_columns
        << ',' << s.lw_additions << ',' << s.peak_columns << ',' << r.beta0 << ',' << r.beta1 << ',' << r.beta2
        << '\n';
}

} // namespace mfr
