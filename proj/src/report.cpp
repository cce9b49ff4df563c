#include "sievelab/report.hpp"

#include <algorithm>
#include <string>

#include "json.hpp"

namespace sievelab {

namespace {

using nlohmann::json;

std::string situation_text(Situation s) {
    return s == Situation::MLessThanJK ? "M<J*K" : "M>J*K";
}

std::string expression_text(const Calculation& c) {
    return std::to_string(c.j) + "*" + std::to_string(c.k) + "+" + c.m.str() + "*N";
}

std::string sequence_text(const Calculation& c) {
    return "Seq (" + std::to_string(c.start) + " to n by " + c.m.str() + ")";
}

std::string pad_right(std::string s, std::size_t width) {
    if (s.size() < width) {
        s.append(width - s.size(), ' ');
    }
    return s;
}

std::string pad_left(std::string s, std::size_t width) {
    if (s.size() < width) {
        s.insert(0, width - s.size(), ' ');
    }
    return s;
}

std::string brace_list(const std::vector<std::uint64_t>& values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) {
            out += ", ";
        }
        out += std::to_string(values[i]);
    }
    out += "}";
    return out;
}

json table_row_json(const Calculation& c, TableStyle style) {
    json row;
    if (style == TableStyle::Numbered) {
        row["index"] = c.index;
    }
    row["j"] = c.j;
    row["k"] = c.k;
    row["m"] = c.m.str();
    row["situation"] = situation_text(c.situation);
    row["start"] = c.start;
    row["step"] = c.m.str();
    return row;
}

void render_table_text(const std::vector<Calculation>& rows, TableStyle style,
                       std::ostream& out) {
    const std::string idx_header = "Calculation";
    const std::string expr_header = "Expression";
    const std::string sit_header = "Situation";
    const std::string seq_header = "Sequence";

    std::size_t idx_w = idx_header.size();
    std::size_t expr_w = expr_header.size();
    for (const Calculation& c : rows) {
        idx_w = std::max(idx_w, std::to_string(c.index).size());
        expr_w = std::max(expr_w, expression_text(c).size());
    }
    // Wide enough that the right-justified M>J*K rows stand apart, as the
    // published table prints them.
    std::size_t sit_w = std::max<std::size_t>(sit_header.size(), 7);

    if (style == TableStyle::Numbered) {
        out << pad_right(idx_header, idx_w) << "  ";
    }
    out << pad_right(expr_header, expr_w) << "  " << pad_right(sit_header, sit_w) << "  "
        << seq_header << "\n";
    for (const Calculation& c : rows) {
        if (style == TableStyle::Numbered) {
            out << pad_right(std::to_string(c.index), idx_w) << "  ";
        }
        std::string sit = situation_text(c.situation);
        sit = c.situation == Situation::MGreaterThanJK ? pad_left(sit, sit_w)
                                                       : pad_right(sit, sit_w);
        out << pad_right(expression_text(c), expr_w) << "  " << sit << "  " << sequence_text(c)
            << "\n";
    }
}

void render_table_csv(const std::vector<Calculation>& rows, TableStyle style,
                      std::ostream& out) {
    if (style == TableStyle::Numbered) {
        out << "index,";
    }
    out << "j,k,m,situation,start,step\n";
    for (const Calculation& c : rows) {
        if (style == TableStyle::Numbered) {
            out << c.index << ",";
        }
        out << c.j << "," << c.k << "," << c.m.str() << "," << situation_text(c.situation) << ","
            << c.start << "," << c.m.str() << "\n";
    }
}

constexpr std::size_t kListingCap = 25;

std::string capped_listing(const std::vector<std::uint64_t>& values) {
    std::string out;
    std::size_t shown = std::min(values.size(), kListingCap);
    for (std::size_t i = 0; i < shown; ++i) {
        if (i != 0) {
            out += " ";
        }
        out += std::to_string(values[i]);
    }
    if (values.size() > shown) {
        out += " ... (+" + std::to_string(values.size() - shown) + " more)";
    }
    return out;
}

}  // namespace

ComparisonReport compare(std::uint64_t n) {
    SieveOptions drop{LogRetention::Drop};
    SieveRun oracle_run = oracle_primes(n);

    ComparisonReport report;
    report.n = n;
    SieveRun runs[] = {fabio_sieve(n, drop), eratosthenes_instrumented(n, drop),
                       euler_instrumented(n, drop)};
    for (SieveRun& run : runs) {
        MethodStats stats;
        stats.method = run.method;
        stats.prime_count = run.primes.size();
        stats.composite_count = run.distinct_removed;
        stats.created_count = run.created_count;
        stats.duplicate_count = run.duplicate_count;
        stats.waste_percent = format_waste_percent(run.duplicate_count, run.distinct_removed);
        stats.feed_count = run.feed_count;
        stats.matches_oracle = run.primes == oracle_run.primes;
        stats.primes = std::move(run.primes);
        report.methods.push_back(std::move(stats));
    }
    return report;
}

std::string format_waste_percent(std::uint64_t duplicates, std::uint64_t composites) {
    if (composites == 0) {
        return "0.00";
    }
    std::uint64_t scaled = duplicates * 10000;
    std::uint64_t hundredths = scaled / composites;
    if (2 * (scaled % composites) >= composites) {
        ++hundredths;
    }
    std::string frac = std::to_string(hundredths % 100);
    if (frac.size() < 2) {
        frac.insert(0, "0");
    }
    return std::to_string(hundredths / 100) + "." + frac;
}

void render_table(const std::vector<Calculation>& rows, TableStyle style, Format format,
                  std::ostream& out) {
    switch (format) {
        case Format::Text:
            render_table_text(rows, style, out);
            return;
        case Format::Csv:
            render_table_csv(rows, style, out);
            return;
        case Format::Json: {
            json doc;
            doc["rows"] = json::array();
            for (const Calculation& c : rows) {
                doc["rows"].push_back(table_row_json(c, style));
            }
            out << doc.dump() << "\n";
            return;
        }
    }
}

void render_comparison(const ComparisonReport& report, Format format, std::ostream& out,
                       bool include_primes) {
    switch (format) {
        case Format::Text: {
            out << "n = " << report.n << "\n";
            const char* headers[] = {"method", "primes",      "composites", "created",
                                     "duplicates", "waste%", "feeds",      "oracle"};
            std::size_t w[8];
            for (int i = 0; i < 8; ++i) {
                w[i] = std::string(headers[i]).size();
            }
            for (const MethodStats& s : report.methods) {
                w[0] = std::max(w[0], std::string(method_name(s.method)).size());
                w[1] = std::max(w[1], std::to_string(s.prime_count).size());
                w[2] = std::max(w[2], std::to_string(s.composite_count).size());
                w[3] = std::max(w[3], std::to_string(s.created_count).size());
                w[4] = std::max(w[4], std::to_string(s.duplicate_count).size());
                w[5] = std::max(w[5], s.waste_percent.size());
                w[6] = std::max(w[6], std::to_string(s.feed_count).size());
            }
            out << pad_right(headers[0], w[0]);
            for (int i = 1; i < 8; ++i) {
                out << "  " << pad_left(headers[i], w[i]);
            }
            out << "\n";
            for (const MethodStats& s : report.methods) {
                out << pad_right(method_name(s.method), w[0]) << "  "
                    << pad_left(std::to_string(s.prime_count), w[1]) << "  "
                    << pad_left(std::to_string(s.composite_count), w[2]) << "  "
                    << pad_left(std::to_string(s.created_count), w[3]) << "  "
                    << pad_left(std::to_string(s.duplicate_count), w[4]) << "  "
                    << pad_left(s.waste_percent, w[5]) << "  "
                    << pad_left(std::to_string(s.feed_count), w[6]) << "  "
                    << pad_left(s.matches_oracle ? "match" : "DIFFERS", w[7]) << "\n";
            }
            return;
        }
        case Format::Csv: {
            out << "n,method,primes,composites,created,duplicates,waste_percent,feeds,"
                   "matches_oracle\n";
            for (const MethodStats& s : report.methods) {
                out << report.n << "," << method_name(s.method) << "," << s.prime_count << ","
                    << s.composite_count << "," << s.created_count << "," << s.duplicate_count
                    << "," << s.waste_percent << "," << s.feed_count << ","
                    << (s.matches_oracle ? "true" : "false") << "\n";
            }
            return;
        }
        case Format::Json: {
            json doc;
            doc["n"] = report.n;
            doc["methods"] = json::array();
            for (const MethodStats& s : report.methods) {
                json entry;
                entry["name"] = method_name(s.method);
                entry["prime_count"] = s.prime_count;
                entry["composites"] = s.composite_count;
                entry["created"] = s.created_count;
                entry["duplicates"] = s.duplicate_count;
                entry["waste_percent"] = s.waste_percent;
                entry["feeds"] = s.feed_count;
                entry["matches_oracle"] = s.matches_oracle;
                if (include_primes) {
                    entry["primes"] = s.primes;
                }
                doc["methods"].push_back(std::move(entry));
            }
            out << doc.dump() << "\n";
            return;
        }
    }
}

void render_verification(const VerificationReport& report, unsigned mask, Format format,
                         std::ostream& out) {
    if (format == Format::Csv) {
        throw format_error("verification reports have no csv rendering");
    }
    if (format == Format::Text) {
        out << "verification at n = " << report.n << "\n";
        if (mask & kCheckDisjoint) {
            if (report.disjoint) {
                out << "disjointness: PASS (no value is covered twice)\n";
            } else {
                std::vector<std::uint64_t> values;
                for (const MultiplyCovered& mc : report.multiply_covered) {
                    values.push_back(mc.value);
                }
                out << "disjointness: FAIL (" << values.size()
                    << " multiply-covered values): " << capped_listing(values) << "\n";
            }
        }
        if (mask & kCheckCoverage) {
            if (report.uncovered_composites.empty()) {
                out << "coverage: PASS (every composite in range is covered)\n";
            } else {
                out << "coverage: FAIL (" << report.uncovered_composites.size()
                    << " uncovered composites): " << capped_listing(report.uncovered_composites)
                    << "\n";
            }
        }
        if (mask & kCheckDivergence) {
            if (report.first_divergence) {
                out << "divergence: FAIL (first divergence at " << *report.first_divergence
                    << ")\n";
            } else {
                out << "divergence: PASS (agrees with the oracle throughout)\n";
            }
        }
        if (mask & kCheckJkNote) {
            if (report.jk_note_failures.empty()) {
                out << "jk-note: PASS (every list member below J*K at J=K rows is prime)\n";
            } else {
                out << "jk-note: FAIL (" << report.jk_note_failures.size()
                    << " counterexamples):";
                std::size_t shown = std::min(report.jk_note_failures.size(), kListingCap);
                for (std::size_t i = 0; i < shown; ++i) {
                    const JkNoteFailure& f = report.jk_note_failures[i];
                    out << " calculation " << f.calculation_index << " (" << f.j << "*" << f.k
                        << ") sees " << f.counterexample << ";";
                }
                if (report.jk_note_failures.size() > shown) {
                    out << " ... (+" << report.jk_note_failures.size() - shown << " more)";
                }
                out << "\n";
            }
        }
        return;
    }

    json doc;
    doc["n"] = report.n;
    if (mask & kCheckDisjoint) {
        json entries = json::array();
        for (const MultiplyCovered& mc : report.multiply_covered) {
            entries.push_back({{"value", mc.value}, {"calculations", mc.calculation_indices}});
        }
        doc["disjointness"] = {{"disjoint", report.disjoint}, {"multiply_covered", entries}};
    }
    if (mask & kCheckCoverage) {
        doc["coverage"] = {{"uncovered", report.uncovered_composites}};
    }
    if (mask & kCheckDivergence) {
        doc["divergence"] = {{"first", report.first_divergence
                                           ? json(*report.first_divergence)
                                           : json(nullptr)}};
    }
    if (mask & kCheckJkNote) {
        json failures = json::array();
        for (const JkNoteFailure& f : report.jk_note_failures) {
            failures.push_back({{"calculation", f.calculation_index},
                                {"j", f.j},
                                {"k", f.k},
                                {"value", f.counterexample}});
        }
        doc["jk_note"] = {{"failures", failures}};
    }
    out << doc.dump() << "\n";
}

void render_primes(const SieveRun& run, Format format, std::ostream& out) {
    switch (format) {
        case Format::Text:
            for (std::uint64_t p : run.primes) {
                out << p << "\n";
            }
            return;
        case Format::Csv:
            out << "prime\n";
            for (std::uint64_t p : run.primes) {
                out << p << "\n";
            }
            return;
        case Format::Json: {
            json doc;
            doc["n"] = run.n;
            doc["method"] = method_name(run.method);
            doc["count"] = run.primes.size();
            doc["primes"] = run.primes;
            out << doc.dump() << "\n";
            return;
        }
    }
}

namespace {

std::string pattern_label(std::uint32_t ordinal) {
    // Bijective base 26: 1 -> A, 26 -> Z, 27 -> AA.
    std::string label;
    while (ordinal > 0) {
        --ordinal;
        label.insert(label.begin(), static_cast<char>('A' + ordinal % 26));
        ordinal /= 26;
    }
    return label;
}

constexpr std::uint64_t kReplayCap = 20000;

}  // namespace

std::vector<ReplayStep> pattern_replay(std::uint64_t n) {
    if (n < 2) {
        throw std::invalid_argument("bound must be at least 2");
    }
    if (n > kReplayCap) {
        throw std::invalid_argument("replay keeps every intermediate list; bound capped at " +
                                    std::to_string(kReplayCap));
    }
    std::vector<ReplayStep> steps;
    PatternEngine engine = PatternEngine::bounded(n);
    while (!engine.done()) {
        Calculation c = engine.next();
        ReplayStep step;
        step.label = pattern_label(c.index);
        step.progression = progression_of(c);
        step.elements = progression_elements(c, n);
        step.snapshot = engine.list().values();
        steps.push_back(std::move(step));
    }
    return steps;
}

void render_replay(std::uint64_t n, const std::vector<ReplayStep>& steps, Format format,
                   std::ostream& out) {
    switch (format) {
        case Format::Text:
            out << "n = " << n << "\n";
            for (const ReplayStep& step : steps) {
                out << "Pattern " << step.label << ": a = " << step.progression.first
                    << ", d = " << step.progression.step.str() << "\n";
                out << "  removes " << brace_list(step.elements) << "\n";
                out << "  S = " << brace_list(step.snapshot) << "\n";
            }
            return;
        case Format::Csv:
            throw format_error("replay walkthroughs have no csv rendering");
        case Format::Json: {
            json doc;
            doc["n"] = n;
            doc["steps"] = json::array();
            for (const ReplayStep& step : steps) {
                doc["steps"].push_back({{"label", step.label},
                                        {"a", step.progression.first},
                                        {"d", step.progression.step.str()},
                                        {"removes", step.elements},
                                        {"survivors", step.snapshot}});
            }
            out << doc.dump() << "\n";
            return;
        }
    }
}

}  // namespace sievelab
