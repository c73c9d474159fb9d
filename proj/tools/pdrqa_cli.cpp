// Batch front end: generate the period-doubling sequence, extract line
// histograms, compute finite-n quantifiers, print the closed-form values,
// run convergence studies, and verify the structural invariants.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdrqa/oracle.hpp"
#include "pdrqa/pdseq.hpp"
#include "pdrqa/rplines.hpp"
#include "pdrqa/rqa.hpp"

using json = nlohmann::ordered_json;
using namespace pdrqa;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r) << "/" << denominator(r);
    return os.str();
}

std::string dec_str(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

struct Output {
    std::string format = "csv";  // csv | json
    std::string path;            // empty = stdout

    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    json meta = json::object();
    json oracle_obj = json::object();

    int emit() const {
        std::ostream* out = &std::cout;
        std::ofstream file;
        if (!path.empty()) {
            file.open(path);
            if (!file) {
                std::cerr << "error: cannot open output file " << path << "\n";
                return kExitIo;
            }
            out = &file;
        }
        if (format == "csv") {
            for (std::size_t c = 0; c < header.size(); ++c)
                *out << header[c] << (c + 1 < header.size() ? "," : "");
            *out << "\n";
            for (const auto& row : rows) {
                for (std::size_t c = 0; c < row.size(); ++c)
                    *out << row[c] << (c + 1 < row.size() ? "," : "");
                *out << "\n";
            }
        } else {
            json doc;
            doc["config"] = meta;
            json jrows = json::array();
            for (const auto& row : rows) {
                json jr = json::object();
                for (std::size_t c = 0; c < row.size(); ++c) jr[header[c]] = row[c];
                jrows.push_back(jr);
            }
            doc["rows"] = jrows;
            doc["oracle"] = oracle_obj;
            *out << doc.dump(2) << "\n";
        }
        if (!path.empty() && !file) {
            std::cerr << "error: write failed for " << path << "\n";
            return kExitIo;
        }
        return 0;
    }
};

json oracle_targets(std::uint32_t m, std::uint64_t lmin) {
    return {{"rr", rat_str(oracle::rr(m, lmin))},
            {"det", rat_str(oracle::det(m, lmin))},
            {"lavg", rat_str(oracle::lavg(m, lmin))},
            {"entr", dec_str(oracle::entr(m, lmin))},
            {"denss", rat_str(oracle::denss_asymptotic(lmin + m - 1))}};
}

std::vector<std::uint64_t> parse_schedule(const std::string& s) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoull(tok));
    }
    return out;
}

int cmd_generate(std::uint64_t n, bool check, const std::string& out_path) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "error: cannot open output file " << out_path << "\n";
            return kExitIo;
        }
        out = &file;
    }
    const BinaryWord sub = pd_prefix_substitution(n);
    *out << word_to_string(sub) << "\n";
    if (check) {
        const BinaryWord toe = pd_prefix_toeplitz(n);
        bool agree = sub == toe;
        for (std::uint64_t i = 1; agree && i <= n; ++i)
            agree = sub[i - 1] == pd_letter(i);
        *out << (agree ? "AGREE" : "DISAGREE") << "\n";
        if (!agree) return kExitVerifyFail;
    }
    if (!out_path.empty() && !file) {
        std::cerr << "error: write failed for " << out_path << "\n";
        return kExitIo;
    }
    return 0;
}

int cmd_lines(std::uint64_t n, std::uint32_t m, const std::string& kind,
              unsigned threads, Output& output) {
    const BinaryWord x = pd_prefix_substitution(n + m - 1);
    const LineHistogram hist = kind == "vertical"
                                   ? vertical_histogram(x, n, m)
                                   : diagonal_histogram(x, n, m, threads);
    output.header = {"length", "count"};
    for (const auto& [len, cnt] : hist.counts)
        output.rows.push_back({std::to_string(len), std::to_string(cnt)});
    output.meta = {{"command", "lines"}, {"n", n}, {"m", m}, {"kind", kind}};
    return output.emit();
}

int cmd_rqa(std::uint64_t n, std::uint32_t m, std::uint64_t lmin,
            unsigned threads, Output& output) {
    const BinaryWord x = pd_prefix_substitution(n + m - 1);
    const RqaReport rep = quantify(diagonal_histogram(x, n, m, threads), lmin);
    output.header = {"quantifier", "exact", "decimal"};
    auto push = [&](const std::string& name, const std::optional<Rational>& v) {
        if (v)
            output.rows.push_back({name, rat_str(*v), dec_str(to_double(*v))});
        else
            output.rows.push_back({name, "undefined", "undefined"});
    };
    push("rr", rep.rr);
    push("det", rep.det);
    push("lavg", rep.lavg);
    if (rep.entr)
        output.rows.push_back({"entr", "", dec_str(*rep.entr)});
    else
        output.rows.push_back({"entr", "undefined", "undefined"});
    push("denss", rep.denss);
    output.meta = {{"command", "rqa"}, {"n", n}, {"m", m}, {"lmin", lmin}};
    output.oracle_obj = oracle_targets(m, lmin);
    return output.emit();
}

int cmd_oracle(std::uint32_t m, std::uint64_t lmin, Output& output) {
    output.header = {"quantifier", "exact", "decimal"};
    const Rational r = oracle::rr(m, lmin);
    const Rational d = oracle::det(m, lmin);
    const Rational la = oracle::lavg(m, lmin);
    output.rows.push_back({"rr", rat_str(r), dec_str(to_double(r))});
    output.rows.push_back({"det", rat_str(d), dec_str(to_double(d))});
    output.rows.push_back({"lavg", rat_str(la), dec_str(to_double(la))});
    output.rows.push_back({"entr", "", dec_str(oracle::entr(m, lmin))});
    const Rational ds = oracle::denss_asymptotic(lmin + m - 1);
    output.rows.push_back({"denss", rat_str(ds), dec_str(to_double(ds))});
    output.meta = {{"command", "oracle"}, {"m", m}, {"lmin", lmin}};
    output.oracle_obj = oracle_targets(m, lmin);
    return output.emit();
}

int cmd_converge(const std::vector<std::uint64_t>& schedule, std::uint32_t m,
                 std::uint64_t lmin, const std::vector<std::uint64_t>& lengths,
                 unsigned threads, Output& output) {
    if (schedule.empty()) {
        std::cerr << "error: empty schedule\n";
        return kExitUsage;
    }
    for (std::size_t i = 1; i < schedule.size(); ++i) {
        if (schedule[i] <= schedule[i - 1]) {
            std::cerr << "error: schedule must be strictly increasing\n";
            return kExitUsage;
        }
    }
    for (std::uint64_t n : schedule) {
        if (n < lmin + 2) {
            std::cerr << "error: n = " << n << " < lmin+2 = " << lmin + 2
                      << " (the plot has no line of length >= lmin there)\n";
            return kExitUsage;
        }
    }

    const Rational rr_lim = oracle::rr(m, lmin);
    const Rational det_lim = oracle::det(m, lmin);
    const Rational lavg_lim = oracle::lavg(m, lmin);
    const double entr_lim = oracle::entr(m, lmin);

    output.header = {"n", "rr", "rr_relerr", "det", "det_relerr",
                     "lavg", "lavg_relerr", "entr", "entr_abserr"};
    for (std::uint64_t l : lengths) {
        output.header.push_back("dens_" + std::to_string(l));
        output.header.push_back("dens_" + std::to_string(l) + "_relerr");
    }

    for (std::uint64_t n : schedule) {
        const BinaryWord x = pd_prefix_substitution(n + m - 1);
        const LineHistogram hist = diagonal_histogram(x, n, m, threads);
        const RqaReport rep = quantify(hist, lmin);
        std::vector<std::string> row;
        auto relerr = [](double v, double lim) {
            return lim == 0.0 ? std::abs(v) : std::abs(v - lim) / std::abs(lim);
        };
        const double rrv = to_double(rep.rr);
        row.push_back(std::to_string(n));
        row.push_back(dec_str(rrv));
        row.push_back(dec_str(relerr(rrv, to_double(rr_lim))));
        const double detv = rep.det ? to_double(*rep.det) : 0.0;
        row.push_back(rep.det ? dec_str(detv) : "undefined");
        row.push_back(rep.det ? dec_str(relerr(detv, to_double(det_lim))) : "undefined");
        const double lavgv = rep.lavg ? to_double(*rep.lavg) : 0.0;
        row.push_back(rep.lavg ? dec_str(lavgv) : "undefined");
        row.push_back(rep.lavg ? dec_str(relerr(lavgv, to_double(lavg_lim)))
                               : "undefined");
        row.push_back(rep.entr ? dec_str(*rep.entr) : "undefined");
        row.push_back(rep.entr ? dec_str(std::abs(*rep.entr - entr_lim)) : "undefined");
        const Rational denom = Rational(n) * n - n;
        for (std::uint64_t l : lengths) {
            auto it = hist.counts.find(l);
            const Rational dv =
                it == hist.counts.end() ? Rational(0) : Rational(it->second) / denom;
            const Rational dlim = oracle::dens_asymptotic(l + m - 1);
            row.push_back(dec_str(to_double(dv)));
            row.push_back(dec_str(relerr(to_double(dv), to_double(dlim))));
        }
        output.rows.push_back(row);
    }

    output.oracle_obj = {{"rr", rat_str(rr_lim)},
                         {"det", rat_str(det_lim)},
                         {"lavg", rat_str(lavg_lim)},
                         {"entr", dec_str(entr_lim)}};
    for (std::uint64_t l : lengths)
        output.oracle_obj["dens_" + std::to_string(l)] =
            rat_str(oracle::dens_asymptotic(l + m - 1));
    output.oracle_obj.update(oracle_targets(m, lmin));
    output.meta = {{"command", "converge"}, {"m", m}, {"lmin", lmin}};
    return output.emit();
}

int cmd_verify(std::uint64_t grid, unsigned threads) {
    int failures = 0;
    auto report = [&](const std::string& name, bool ok, const std::string& detail) {
        std::cout << (ok ? "PASS  " : "FAIL  ") << name;
        if (!detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
        if (!ok) ++failures;
    };

    // closed-form start points vs brute-force scan on a bounded grid
    {
        const std::uint64_t n = 2 * grid + 200;
        const BinaryWord x = pd_prefix_substitution(n);
        const auto lines = reference_scan(x, n, 1);
        std::set<StartPoint> observed;
        for (const auto& ln : lines)
            if (ln.i <= grid && ln.j <= grid && ln.length <= grid &&
                std::max(ln.i, ln.j) + ln.length <= n)
                observed.insert(ln);

        std::vector<std::uint64_t> lens;
        for (std::uint64_t l = 1; l <= grid; ++l)
            if (oracle::classify_length(l).kind != oracle::LengthClass::Kind::none)
                lens.push_back(l);
        bool ok = true;
        std::string detail;
        std::uint64_t predicted = 0;
        for (std::uint64_t i = 1; ok && i <= grid; ++i) {
            for (std::uint64_t j = 1; ok && j <= grid; ++j) {
                if (i == j) continue;
                for (std::uint64_t l : lens) {
                    const bool pred = oracle::is_line_start(i, j, l);
                    if (pred) ++predicted;
                    if (pred != (observed.count({i, j, l}) > 0)) {
                        ok = false;
                        detail = "counterexample i=" + std::to_string(i) +
                                 " j=" + std::to_string(j) + " l=" + std::to_string(l);
                        break;
                    }
                }
            }
        }
        if (ok && predicted != observed.size()) {
            ok = false;
            detail = "scan found " + std::to_string(observed.size()) +
                     " lines, oracle predicted " + std::to_string(predicted);
        }
        report("start-point oracle vs brute force", ok, detail);
    }

    // all interior line lengths admissible
    {
        const std::uint64_t n = 4096;
        const BinaryWord x = pd_prefix_substitution(n);
        const auto lines = reference_scan(x, n, 1);
        bool ok = true;
        std::string detail;
        for (const auto& ln : lines) {
            if (std::min(ln.i, ln.j) < 2 || std::max(ln.i, ln.j) + ln.length > n)
                continue;  // boundary-truncated
            if (oracle::classify_length(ln.length).kind ==
                oracle::LengthClass::Kind::none) {
                ok = false;
                detail = "i=" + std::to_string(ln.i) + " j=" + std::to_string(ln.j) +
                         " l=" + std::to_string(ln.length);
                break;
            }
        }
        report("interior line lengths admissible", ok, detail);
    }

    // vertical lines: {1,3} at m=1, {1} at m=3; the run cut off by the plot
    // boundary at row n only needs to be a truncation of an allowed run
    {
        const std::uint64_t n = 1024;
        const BinaryWord x = pd_prefix_substitution(n + 4);
        bool ok = true;
        std::string detail;
        auto match = [&](std::uint64_t i, std::uint64_t j, std::uint32_t m) {
            for (std::uint32_t h = 0; h < m; ++h)
                if (x[i - 1 + h] != x[j - 1 + h]) return false;
            return true;
        };
        for (std::uint64_t j = 1; j <= n; ++j) {
            for (std::uint32_t m : {1u, 3u}) {
                std::uint64_t i = 1;
                while (i <= n) {
                    if (!match(i, j, m)) { ++i; continue; }
                    std::uint64_t end = i;
                    while (end < n && match(end + 1, j, m)) ++end;
                    const std::uint64_t len = end - i + 1;
                    const bool good =
                        m == 1 ? (len == 1 || len == 3 || (end == n && len == 2))
                               : len == 1;
                    if (!good) {
                        ok = false;
                        detail = "m=" + std::to_string(m) + " length " +
                                 std::to_string(len) + " in column " + std::to_string(j);
                    }
                    i = end + 1;
                }
            }
        }
        report("vertical line lengths", ok, detail);
    }

    // embedding shift on interior lines: m-lines at (i,j) <-> 1-lines of
    // length +m-1 at the same start
    {
        const std::uint64_t n = 512;
        const std::uint32_t m = 3;
        const BinaryWord x = pd_prefix_substitution(n + m - 1 + n);
        const auto lm = reference_scan(x, n, m);
        const auto l1 = reference_scan(x, n + m - 1, 1);
        std::vector<StartPoint> shifted;
        for (const auto& ln : lm)
            if (std::min(ln.i, ln.j) >= 2 && std::max(ln.i, ln.j) + ln.length <= n)
                shifted.push_back({ln.i, ln.j, ln.length + m - 1});
        std::vector<StartPoint> base;
        for (const auto& ln : l1)
            if (ln.i <= n && ln.j <= n && std::min(ln.i, ln.j) >= 2 &&
                std::max(ln.i, ln.j) + ln.length <= n + m - 1 && ln.length >= m)
                base.push_back(ln);
        std::sort(shifted.begin(), shifted.end());
        std::sort(base.begin(), base.end());
        bool ok = shifted == base;
        report("embedding-dimension shift (interior)", ok,
               ok ? "" : "interior line sets differ");
    }

    // deterministic parallel merge
    {
        const std::uint64_t n = 2048;
        const BinaryWord x = pd_prefix_substitution(n);
        const LineHistogram h1 = diagonal_histogram(x, n, 1, 1);
        const LineHistogram h4 = diagonal_histogram(x, n, 1, threads > 1 ? threads : 4);
        report("parallel scan determinism", h1.counts == h4.counts, "");
    }

    return failures == 0 ? 0 : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact recurrence-plot line statistics of the period-doubling sequence"};
    app.require_subcommand(1);

    std::uint64_t n = 256;
    std::uint32_t m = 1;
    std::uint64_t lmin = 1;
    double eps = 0.0;
    std::string schedule_str;
    std::string lengths_str = "1,2,3";
    std::string format = "csv";
    std::string out_path;
    unsigned threads = 1;
    std::string kind = "diagonal";
    bool check = false;
    std::uint64_t grid = 512;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", out_path);
        sub->add_option("--threads", threads);
    };

    auto* gen = app.add_subcommand("generate", "emit x_1..x_n");
    gen->add_option("--n", n)->required();
    gen->add_flag("--check", check, "cross-check all three generators");
    gen->add_option("--out", out_path);

    auto* lines = app.add_subcommand("lines", "line-length histogram");
    lines->add_option("--n", n)->required();
    lines->add_option("--m", m);
    lines->add_option("--eps", eps)->check(CLI::PositiveNumber);
    lines->add_option("--kind", kind)->check(CLI::IsMember({"diagonal", "vertical"}));
    add_common(lines);

    auto* rqa = app.add_subcommand("rqa", "finite-n quantifiers");
    rqa->add_option("--n", n)->required();
    rqa->add_option("--m", m);
    rqa->add_option("--eps", eps)->check(CLI::PositiveNumber);
    rqa->add_option("--lmin", lmin);
    add_common(rqa);

    auto* orc = app.add_subcommand("oracle", "closed-form asymptotic quantifiers");
    orc->add_option("--m", m);
    orc->add_option("--eps", eps)->check(CLI::PositiveNumber);
    orc->add_option("--lmin", lmin);
    add_common(orc);

    auto* conv = app.add_subcommand("converge", "finite-n vs asymptotic study");
    conv->add_option("--schedule", schedule_str)->required();
    conv->add_option("--m", m);
    conv->add_option("--eps", eps)->check(CLI::PositiveNumber);
    conv->add_option("--lmin", lmin);
    conv->add_option("--lengths", lengths_str, "comma list of DENS lengths");
    add_common(conv);

    auto* ver = app.add_subcommand("verify", "run the structural invariant suites");
    ver->add_option("--grid", grid, "side of the start-point comparison grid");
    ver->add_option("--threads", threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kExitUsage;
    }

    try {
        if (eps > 0.0) {
            const std::uint32_t m_eff = eps_to_embedding(eps, m);
            std::cerr << "eps=" << eps << " mapped to effective m=" << m_eff << "\n";
            m = m_eff;
        }
        Output output;
        output.format = format;
        output.path = out_path;
        if (gen->parsed()) return cmd_generate(n, check, out_path);
        if (lines->parsed()) return cmd_lines(n, m, kind, threads, output);
        if (rqa->parsed()) return cmd_rqa(n, m, lmin, threads, output);
        if (orc->parsed()) return cmd_oracle(m, lmin, output);
        if (conv->parsed())
            return cmd_converge(parse_schedule(schedule_str), m, lmin,
                                parse_schedule(lengths_str), threads, output);
        if (ver->parsed()) return cmd_verify(grid, threads);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
