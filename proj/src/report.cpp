#include "fiblucas/report.hpp"

#include <sstream>

#include "json.hpp"

namespace fiblucas {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kMaxJsonSafe = (std::uint64_t{1} << 53) - 1;

Json json_integer(std::uint64_t v) {
    if (v <= kMaxJsonSafe) return Json(v);
    return Json(std::to_string(v));
}

Json json_integer(const Natural& v) {
    if (v.fits_u64()) return json_integer(v.to_u64());
    return Json(v.to_string());
}

template <typename T>
Json json_optional(const std::optional<T>& v) {
    return v ? json_integer(*v) : Json(nullptr);
}

bool has_indices(const DivisibilityWitness& w) {
    return w.product_kind != ProductKind::ExceptionTwo;
}

Json witness_json(const DivisibilityWitness& w) {
    const auto& c = w.prime_class;
    Json j;
    j["p"] = json_integer(c.p);
    j["form"] = to_string(c.form);
    j["r"] = json_optional(c.r);
    j["five_residue"] = to_string(c.five_residue);
    j["product_kind"] = to_string(w.product_kind);
    const bool idx = has_indices(w);
    j["index_lo"] = idx ? json_integer(w.index_lo) : Json(nullptr);
    j["index_hi"] = idx ? json_integer(w.index_hi) : Json(nullptr);
    j["divisible_index"] = json_optional(w.divisible_index);
    j["residue_lo"] = idx ? json_integer(w.residue_lo) : Json(nullptr);
    j["residue_hi"] = idx ? json_integer(w.residue_hi) : Json(nullptr);
    return j;
}

template <typename T>
std::string csv_optional(const std::optional<T>& v) {
    return v ? std::to_string(*v) : std::string{};
}

std::string witness_csv_row(const DivisibilityWitness& w) {
    const auto& c = w.prime_class;
    const bool idx = has_indices(w);
    auto field = [idx](std::uint64_t v) { return idx ? std::to_string(v) : std::string{}; };
    std::ostringstream os;
    os << c.p << ',' << to_string(c.form) << ',' << csv_optional(c.r) << ','
       << to_string(c.five_residue) << ',' << to_string(w.product_kind) << ','
       << field(w.index_lo) << ',' << field(w.index_hi) << ',' << csv_optional(w.divisible_index)
       << ',' << field(w.residue_lo) << ',' << field(w.residue_hi);
    return os.str();
}

std::string human_form(const PrimeClass& c) {
    switch (c.form) {
        case PrimeForm::FourRPlus1: return "FourRPlus1(r=" + std::to_string(*c.r) + ")";
        case PrimeForm::FourRPlus3: return "FourRPlus3(r=" + std::to_string(*c.r) + ")";
        case PrimeForm::SpecialTwo: return "SpecialTwo";
        case PrimeForm::SpecialFive: return "SpecialFive";
    }
    return "?";
}

std::string human_residue(FiveResidue f) {
    switch (f) {
        case FiveResidue::PlusMinusOne: return "p = +-1 (mod 5)";
        case FiveResidue::PlusMinusTwo: return "p = +-2 (mod 5)";
        case FiveResidue::Zero: return "p = 0 (mod 5)";
        case FiveResidue::NotApplicable: return "even prime";
    }
    return "?";
}

std::string join(const std::vector<std::uint64_t>& xs, char sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string human_witness(const DivisibilityWitness& w) {
    const auto& c = w.prime_class;
    std::ostringstream os;
    os << "p = " << c.p << '\n';
    os << "class: " << human_form(c) << ", " << human_residue(c.five_residue) << '\n';
    if (w.product_kind == ProductKind::ExceptionTwo) {
        os << "exception: p = 2 is neither 4r+1 nor 4r+3; no consecutive product applies\n";
        return os.str();
    }
    if (w.product_kind == ProductKind::ExceptionFive) {
        os << "exception: p = 5 is excluded from the 4r+1 case; it divides neither F_2 nor F_3\n";
        os << "residues: F_2 = " << w.residue_lo << ", F_3 = " << w.residue_hi
           << " (mod 5); F_2 * F_3 = 2\n";
        os << "note: L_5 = 11 = 1 (mod 5)\n";
        return os.str();
    }
    const char x = w.product_kind == ProductKind::FibonacciProduct ? 'F' : 'L';
    os << "product: " << x << '_' << w.index_lo << " * " << x << '_' << w.index_hi << " ("
       << to_string(w.product_kind) << ")\n";
    os << "residues: " << x << '_' << w.index_lo << " = " << w.residue_lo << ", " << x << '_'
       << w.index_hi << " = " << w.residue_hi << " (mod " << c.p << ")\n";
    if (w.divisible_index) os << "divides: " << x << '_' << *w.divisible_index << '\n';
    return os.str();
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
    if (name == "human") return OutputFormat::Human;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    return std::nullopt;
}

std::string render_verification(const VerificationReport& rep, OutputFormat format) {
    std::ostringstream os;
    switch (format) {
        case OutputFormat::Json: {
            Json j;
            j["range"] = {{"from", json_integer(rep.range.lo())},
                          {"to", json_integer(rep.range.hi())}};
            Json summary;
            summary["primes_checked"] = json_integer(rep.primes_checked);
            summary["count_fib_lo"] = json_integer(rep.count_fib_lo);
            summary["count_fib_hi"] = json_integer(rep.count_fib_hi);
            summary["count_lucas_lo"] = json_integer(rep.count_lucas_lo);
            summary["count_lucas_hi"] = json_integer(rep.count_lucas_hi);
            summary["exceptions_seen"] = Json::array();
            for (auto p : rep.exceptions_seen) summary["exceptions_seen"].push_back(json_integer(p));
            summary["counterexamples"] = json_integer(rep.counterexamples.size());
            j["summary"] = std::move(summary);
            j["counterexamples"] = Json::array();
            for (const auto& c : rep.counterexamples) {
                Json row = witness_json(c.witness);
                row["reason"] = c.reason;
                j["counterexamples"].push_back(std::move(row));
            }
            if (!rep.witnesses.empty()) {
                j["witnesses"] = Json::array();
                for (const auto& w : rep.witnesses) j["witnesses"].push_back(witness_json(w));
            }
            os << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv: {
            os << "from,to,primes_checked,count_fib_lo,count_fib_hi,count_lucas_lo,"
                  "count_lucas_hi,exceptions_seen,counterexamples\n";
            os << rep.range.lo() << ',' << rep.range.hi() << ',' << rep.primes_checked << ','
               << rep.count_fib_lo << ',' << rep.count_fib_hi << ',' << rep.count_lucas_lo << ','
               << rep.count_lucas_hi << ',' << join(rep.exceptions_seen, ';') << ','
               << rep.counterexamples.size() << '\n';
            os << '\n' << kWitnessCsvHeader << ",reason\n";
            for (const auto& c : rep.counterexamples) {
                os << witness_csv_row(c.witness) << ",\"" << c.reason << "\"\n";
            }
            if (!rep.witnesses.empty()) {
                os << '\n' << kWitnessCsvHeader << '\n';
                for (const auto& w : rep.witnesses) os << witness_csv_row(w) << '\n';
            }
            break;
        }
        case OutputFormat::Human: {
            os << "range: [" << rep.range.lo() << ", " << rep.range.hi() << "]\n";
            os << "odd primes checked (excluding 5): " << rep.primes_checked << '\n';
            os << "  4r+1, p | F_2r   (p = +-1 mod 5): " << rep.count_fib_lo << '\n';
            os << "  4r+1, p | F_2r+1 (p = +-2 mod 5): " << rep.count_fib_hi << '\n';
            os << "  4r+3, p | L_2r+1 (p = +-1 mod 5): " << rep.count_lucas_lo << '\n';
            os << "  4r+3, p | L_2r+2 (p = +-2 mod 5): " << rep.count_lucas_hi << '\n';
            os << "exceptions seen: "
               << (rep.exceptions_seen.empty() ? "none" : join(rep.exceptions_seen, ' ')) << '\n';
            os << "counterexamples: " << rep.counterexamples.size() << '\n';
            for (const auto& c : rep.counterexamples) {
                os << "  p = " << c.witness.prime_class.p << ": " << c.reason << '\n';
            }
            if (!rep.witnesses.empty()) {
                os << "witnesses:\n";
                for (const auto& w : rep.witnesses) {
                    const char x = w.product_kind == ProductKind::FibonacciProduct ? 'F' : 'L';
                    os << "  " << w.prime_class.p << " | " << x << '_' << *w.divisible_index
                       << '\n';
                }
            }
            break;
        }
    }
    return os.str();
}

std::string render_witness(const DivisibilityWitness& w, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json: return witness_json(w).dump(2) + "\n";
        case OutputFormat::Csv:
            return std::string(kWitnessCsvHeader) + "\n" + witness_csv_row(w) + "\n";
        case OutputFormat::Human: return human_witness(w);
    }
    return {};
}

std::string render_classification(const PrimeClass& c, std::optional<ApparitionSide> side,
                                  OutputFormat format) {
    std::ostringstream os;
    switch (format) {
        case OutputFormat::Json: {
            Json j;
            j["p"] = json_integer(c.p);
            j["form"] = to_string(c.form);
            j["r"] = json_optional(c.r);
            j["five_residue"] = to_string(c.five_residue);
            j["apparition_side"] = side ? Json(to_string(*side)) : Json(nullptr);
            os << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            os << "p,form,r,five_residue,apparition_side\n";
            os << c.p << ',' << to_string(c.form) << ',' << csv_optional(c.r) << ','
               << to_string(c.five_residue) << ',' << (side ? to_string(*side) : "") << '\n';
            break;
        case OutputFormat::Human:
            os << c.p << ": " << human_form(c) << ", " << human_residue(c.five_residue);
            if (side) {
                os << ", "
                   << (*side == ApparitionSide::DividesFpMinus1 ? "DividesFpMinus1 (p | F_{p-1})"
                                                               : "DividesFpPlus1 (p | F_{p+1})");
            }
            os << '\n';
            break;
    }
    return os.str();
}

std::string render_identities(const IdentitySweepReport& rep, const IdentityGrid& grid,
                              OutputFormat format) {
    std::ostringstream os;
    auto indices_of = [](const IdentityCheckResult& r) { return join(r.indices, ';'); };
    switch (format) {
        case OutputFormat::Json: {
            Json j;
            j["grid"] = {{"max_n", json_integer(grid.max_n)},
                         {"max_m", json_integer(grid.max_m)},
                         {"max_r", json_integer(grid.max_r)},
                         {"max_p", json_integer(grid.max_p)}};
            j["identities"] = Json::array();
            for (IdentityId id : kAllIdentities) {
                const auto& t = rep.tally(id);
                j["identities"].push_back({{"identity", identity_name(id)},
                                           {"checked", json_integer(t.checked)},
                                           {"passed", json_integer(t.passed)},
                                           {"failed", json_integer(t.checked - t.passed)}});
            }
            j["failures"] = Json::array();
            for (const auto& f : rep.failures) {
                Json row;
                row["identity"] = identity_name(f.identity);
                row["indices"] = Json::array();
                for (auto i : f.indices) row["indices"].push_back(json_integer(i));
                row["lhs"] = json_integer(f.lhs);
                row["rhs"] = json_integer(f.rhs);
                j["failures"].push_back(std::move(row));
            }
            j["all_passed"] = rep.all_passed();
            os << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            os << "identity,checked,passed,failed\n";
            for (IdentityId id : kAllIdentities) {
                const auto& t = rep.tally(id);
                os << identity_name(id) << ',' << t.checked << ',' << t.passed << ','
                   << t.checked - t.passed << '\n';
            }
            os << "\nidentity,indices,lhs,rhs\n";
            for (const auto& f : rep.failures) {
                os << identity_name(f.identity) << ',' << indices_of(f) << ',' << f.lhs << ','
                   << f.rhs << '\n';
            }
            break;
        case OutputFormat::Human:
            os << "grid: max_n=" << grid.max_n << " max_m=" << grid.max_m
               << " max_r=" << grid.max_r << " max_p=" << grid.max_p << '\n';
            for (IdentityId id : kAllIdentities) {
                const auto& t = rep.tally(id);
                os << "  " << identity_name(id) << ": " << t.passed << '/' << t.checked
                   << " passed\n";
            }
            os << "failures: " << rep.failures.size() << '\n';
            for (const auto& f : rep.failures) {
                os << "  " << identity_name(f.identity) << '(' << indices_of(f)
                   << "): " << f.lhs << " != " << f.rhs << '\n';
            }
            break;
    }
    return os.str();
}

std::string render_value(SequenceKind kind, Index n, std::optional<std::uint64_t> modulus,
                         const Natural& value, OutputFormat format) {
    const std::string_view seq = kind == SequenceKind::Fibonacci ? "fib" : "lucas";
    std::ostringstream os;
    switch (format) {
        case OutputFormat::Json: {
            Json j;
            j["sequence"] = seq;
            j["n"] = json_integer(n);
            j["modulus"] = json_optional(modulus);
            j["value"] = json_integer(value);
            os << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            os << "sequence,n,modulus,value\n"
               << seq << ',' << n << ',' << csv_optional(modulus) << ',' << value << '\n';
            break;
        case OutputFormat::Human: os << value << '\n'; break;
    }
    return os.str();
}

}  // namespace fiblucas
