#include "ffopt/report.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ffopt {

namespace {

const char* kSummaryHeader =
    "algorithm,objective,runs,successes,success_rate,mean_evaluations,std_evaluations";
const char* kRunsHeader = "algorithm,objective,seed,evaluations,best_value,success";

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

char detect_sep(const std::string& header) {
    return header.find('\t') != std::string::npos ? '\t' : ',';
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

std::uint64_t parse_u64(const std::string& text) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size())
        throw std::invalid_argument("bad integer field '" + text + "'");
    return v;
}

long long round_half_even(double value) {
    return static_cast<long long>(std::nearbyint(value));
}

void expect_header(const std::string& got_raw, const char* want, char sep) {
    std::string want_sep(want);
    if (sep == '\t') std::replace(want_sep.begin(), want_sep.end(), ',', '\t');
    if (got_raw != want_sep)
        throw std::invalid_argument("unexpected header '" + got_raw + "' (want '" +
                                    want_sep + "')");
}

}  // namespace

std::string format_double(double value) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc()) throw std::logic_error("to_chars failed");
    return std::string(buf, p);
}

double parse_double(const std::string& text) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size())
        throw std::invalid_argument("bad number field '" + text + "'");
    return v;
}

std::string format_cell(const SummaryRow& row) {
    std::ostringstream out;
    if (row.successes == 0) {
        out << "— ";
    } else {
        out << round_half_even(row.mean_evaluations) << " ± "
            << round_half_even(row.std_evaluations) << ' ';
    }
    out << '(' << round_half_even(row.success_rate * 100.0) << "%)";
    return out.str();
}

std::string emit_table(const std::vector<SummaryRow>& rows) {
    if (rows.empty()) throw std::invalid_argument("emit_table: no rows");

    std::vector<std::string> objectives;
    for (const auto& r : rows)
        if (std::find(objectives.begin(), objectives.end(), r.objective) ==
            objectives.end())
            objectives.push_back(r.objective);

    std::vector<Algorithm> algos;
    for (Algorithm a : {Algorithm::GA, Algorithm::PSO, Algorithm::FA})
        if (std::any_of(rows.begin(), rows.end(),
                        [&](const SummaryRow& r) { return r.algorithm == a; }))
            algos.push_back(a);

    auto cell = [&](const std::string& obj, Algorithm a) -> std::string {
        for (const auto& r : rows)
            if (r.objective == obj && r.algorithm == a) return format_cell(r);
        return "";
    };

    // column display widths; the ± and — glyphs are multi-byte but one
    // column wide, so measure in code points
    auto display_width = [](const std::string& s) {
        std::size_t w = 0;
        for (unsigned char c : s)
            if ((c & 0xc0) != 0x80) ++w;
        return w;
    };

    std::vector<std::string> headers = {"Functions/Algorithms"};
    for (Algorithm a : algos) {
        std::string name = to_string(a);
        std::transform(name.begin(), name.end(), name.begin(),
                       [](unsigned char c) { return std::toupper(c); });
        headers.push_back(name);
    }

    std::vector<std::size_t> widths(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) widths[c] = display_width(headers[c]);
    for (const auto& obj : objectives) {
        widths[0] = std::max(widths[0], display_width(obj));
        for (std::size_t c = 0; c < algos.size(); ++c)
            widths[c + 1] = std::max(widths[c + 1], display_width(cell(obj, algos[c])));
    }

    std::ostringstream out;
    auto emit_row = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            out << cells[c];
            if (c + 1 < cells.size())
                out << std::string(widths[c] - display_width(cells[c]) + 2, ' ');
        }
        out << '\n';
    };

    emit_row(headers);
    std::size_t total = 0;
    for (std::size_t c = 0; c < widths.size(); ++c)
        total += widths[c] + (c + 1 < widths.size() ? 2 : 0);
    out << std::string(total, '-') << '\n';
    for (const auto& obj : objectives) {
        std::vector<std::string> cells = {obj};
        for (Algorithm a : algos) cells.push_back(cell(obj, a));
        emit_row(cells);
    }
    return out.str();
}

void write_summary(std::ostream& os, const std::vector<SummaryRow>& rows, char sep) {
    std::string header(kSummaryHeader);
    if (sep != ',') std::replace(header.begin(), header.end(), ',', sep);
    os << header << '\n';
    for (const auto& r : rows) {
        os << to_string(r.algorithm) << sep << r.objective << sep << r.runs << sep
           << r.successes << sep << format_double(r.success_rate) << sep
           << format_double(r.mean_evaluations) << sep
           << format_double(r.std_evaluations) << '\n';
    }
}

std::vector<SummaryRow> read_summary(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw std::invalid_argument("empty summary input");
    line = strip_cr(line);
    const char sep = detect_sep(line);
    expect_header(line, kSummaryHeader, sep);

    std::vector<SummaryRow> rows;
    while (std::getline(is, line)) {
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto f = split(line, sep);
        if (f.size() != 7)
            throw std::invalid_argument("summary row has " + std::to_string(f.size()) +
                                        " fields: '" + line + "'");
        SummaryRow r;
        r.algorithm = parse_algorithm(f[0]);
        r.objective = f[1];
        r.runs = parse_u64(f[2]);
        r.successes = parse_u64(f[3]);
        r.success_rate = parse_double(f[4]);
        r.mean_evaluations = parse_double(f[5]);
        r.std_evaluations = parse_double(f[6]);
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_runs(std::ostream& os, const std::vector<RunRecord>& records, char sep) {
    std::string header(kRunsHeader);
    if (sep != ',') std::replace(header.begin(), header.end(), ',', sep);
    os << header << '\n';
    for (const auto& r : records) {
        os << to_string(r.algorithm) << sep << r.objective_name << sep << r.seed << sep
           << r.evaluations_used << sep << format_double(r.best_value) << sep
           << (r.success ? "true" : "false") << '\n';
    }
}

std::vector<RunRecord> read_runs(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("empty runs input");
    line = strip_cr(line);
    const char sep = detect_sep(line);
    expect_header(line, kRunsHeader, sep);

    std::vector<RunRecord> records;
    while (std::getline(is, line)) {
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto f = split(line, sep);
        if (f.size() != 6)
            throw std::invalid_argument("runs row has " + std::to_string(f.size()) +
                                        " fields: '" + line + "'");
        RunRecord r;
        r.algorithm = parse_algorithm(f[0]);
        r.objective_name = f[1];
        r.seed = parse_u64(f[2]);
        r.evaluations_used = parse_u64(f[3]);
        r.best_value = parse_double(f[4]);
        if (f[5] == "true")
            r.success = true;
        else if (f[5] == "false")
            r.success = false;
        else
            throw std::invalid_argument("bad success field '" + f[5] + "'");
        records.push_back(std::move(r));
    }
    return records;
}

void write_trace(std::ostream& os, const std::vector<TraceRow>& rows, std::size_t dim,
                 char sep) {
    os << "generation" << sep << "agent_id";
    for (std::size_t k = 1; k <= dim; ++k) os << sep << 'x' << k;
    os << sep << 'f' << '\n';
    for (const auto& r : rows) {
        os << r.generation << sep << r.agent_id;
        for (double x : r.position) os << sep << format_double(x);
        os << sep << format_double(r.value) << '\n';
    }
}

}  // namespace ffopt
