#include "ccm/dataset_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace ccm {

namespace {

constexpr std::string_view kCountsHeader = "group,cause,successes,total";
constexpr std::string_view kRatesHeader = "group,cause,rate,weight";

std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.emplace_back(line.substr(start));
            break;
        }
        fields.emplace_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

// 1-based column where the n-th comma-separated field starts.
std::size_t field_column(const std::vector<std::string>& fields, std::size_t index) {
    std::size_t col = 1;
    for (std::size_t i = 0; i < index && i < fields.size(); ++i) {
        col += fields[i].size() + 1;
    }
    return col;
}

std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

}  // namespace

std::optional<double> parse_plain_double(std::string_view text) {
    if (text.empty()) return std::nullopt;
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::fixed);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    return value;
}

std::optional<std::int64_t> parse_plain_int(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    return value;
}

std::string format_full(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed);
    if (ec != std::errc()) return "0";
    return std::string(buf, ptr);
}

StratifiedDataset parse_dataset_csv(std::string_view text, std::string_view source_name) {
    std::optional<Schema> schema;
    std::vector<CountRow> count_rows;
    std::vector<RateRow> rate_rows;
    std::map<std::string, double> prior;
    std::string outcome_label = "y1";

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = strip_cr(
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos));
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (line.empty()) continue;

        if (line.front() == '#') {
            const auto fields = split_fields(line.substr(1));
            if (!fields.empty() && fields[0] == "prior") {
                if (fields.size() != 3) {
                    throw Error(ErrorCode::ParseError,
                                std::string(source_name) + ": #prior needs group and probability",
                                line_no);
                }
                const auto p = parse_plain_double(fields[2]);
                if (!p) {
                    throw Error(ErrorCode::ParseError,
                                std::string(source_name) + ": bad probability '" + fields[2] + "'",
                                line_no);
                }
                prior[fields[1]] = *p;
            } else if (!fields.empty() && fields[0] == "outcome") {
                if (fields.size() != 2) {
                    throw Error(ErrorCode::ParseError,
                                std::string(source_name) + ": #outcome needs one label", line_no);
                }
                outcome_label = fields[1];
            }
            // Other #-lines are comments.
            continue;
        }

        if (!schema) {
            if (line == kCountsHeader) {
                schema = Schema::Counts;
            } else if (line == kRatesHeader) {
                schema = Schema::Rates;
            } else {
                throw Error(ErrorCode::SchemaError,
                            std::string(source_name) + ": unknown header '" + std::string(line) +
                                "'",
                            line_no);
            }
            continue;
        }

        const auto fields = split_fields(line);
        if (fields.size() != 4) {
            throw Error(ErrorCode::ParseError,
                        std::string(source_name) + ": expected 4 fields, got " +
                            std::to_string(fields.size()),
                        line_no);
        }
        if (*schema == Schema::Counts) {
            const auto successes = parse_plain_int(fields[2]);
            const auto total = parse_plain_int(fields[3]);
            if (!successes || !total) {
                const std::size_t bad = !successes ? 2 : 3;
                throw Error(ErrorCode::ParseError,
                            std::string(source_name) + ": bad count '" + fields[bad] + "' (col " +
                                std::to_string(field_column(fields, bad)) + ")",
                            line_no);
            }
            count_rows.push_back(CountRow{fields[0], fields[1], *successes, *total});
        } else {
            const auto rate = parse_plain_double(fields[2]);
            const auto weight = parse_plain_double(fields[3]);
            if (!rate || !weight) {
                const std::size_t bad = !rate ? 2 : 3;
                throw Error(ErrorCode::ParseError,
                            std::string(source_name) + ": bad number '" + fields[bad] + "' (col " +
                                std::to_string(field_column(fields, bad)) + ")",
                            line_no);
            }
            rate_rows.push_back(RateRow{fields[0], fields[1], *rate, *weight});
        }
    }

    if (!schema) {
        throw Error(ErrorCode::SchemaError, std::string(source_name) + ": no header line");
    }
    if (*schema == Schema::Counts) {
        if (!prior.empty()) {
            throw Error(ErrorCode::SchemaError,
                        std::string(source_name) +
                            ": #prior is not allowed with the counts schema (P(g) is derived "
                            "from the totals)");
        }
        return build_from_counts(count_rows, outcome_label);
    }
    return build_from_rates(rate_rows, prior.empty() ? nullptr : &prior, outcome_label);
}

StratifiedDataset load_dataset(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dataset_csv(buf.str(), path.filename().string());
}

std::string render_dataset_csv(const StratifiedDataset& dataset) {
    std::string out;
    if (dataset.outcome_label() != "y1") {
        out += "#outcome,";
        out += dataset.outcome_label();
        out += "\n";
    }
    if (dataset.schema() == Schema::Counts) {
        out += kCountsHeader;
        out += "\n";
        for (const auto& group : dataset.groups()) {
            const auto& cells = std::get<std::array<CountCell, 2>>(group.cells);
            for (std::size_t ci = 0; ci < 2; ++ci) {
                out += group.label + "," + dataset.causes()[ci] + "," +
                       std::to_string(cells[ci].successes) + "," +
                       std::to_string(cells[ci].total) + "\n";
            }
        }
        return out;
    }
    out += kRatesHeader;
    out += "\n";
    for (const auto& group : dataset.groups()) {
        const auto& cells = std::get<std::array<RateCell, 2>>(group.cells);
        for (std::size_t ci = 0; ci < 2; ++ci) {
            out += group.label + "," + dataset.causes()[ci] + "," + format_full(cells[ci].rate) +
                   "," + format_full(cells[ci].weight) + "\n";
        }
    }
    if (dataset.has_explicit_prior()) {
        for (std::size_t gi = 0; gi < dataset.group_count(); ++gi) {
            out += "#prior," + dataset.groups()[gi].label + "," +
                   format_full(dataset.group_prior(gi)) + "\n";
        }
    }
    return out;
}

}  // namespace ccm
