#include "linrep/cli.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "linrep/errors.hpp"
#include "linrep/polymat.hpp"

namespace linrep::cli {

using nlohmann::json;

namespace {

json make_envelope(const std::string& command, const std::string& input, json result,
                   std::vector<std::string> diagnostics) {
    return json{{"schema_version", kSchemaVersion},
                {"command", command},
                {"input", input},
                {"result", std::move(result)},
                {"diagnostics", std::move(diagnostics)}};
}

json ints_to_json(const std::vector<Int>& values) {
    json arr = json::array();
    for (const Int& v : values) arr.push_back(v.get_str());
    return arr;
}

std::vector<Int> parse_bigint_list(const std::string& text) {
    std::vector<Int> values;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        values.push_back(parse_bigint(token));
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
            flush();
        } else {
            token.push_back(ch);
        }
    }
    flush();
    return values;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

// Ratio of threshold to the chosen x, to one decimal, for diagnostics.
std::string overshoot_factor(const Int& bound, const Int& x) {
    const Int tenths = (bound * 10) / x;
    const Int whole = tenths / 10;
    const Int frac = tenths % 10;
    return whole.get_str() + "." + frac.get_str();
}

json repr_result(const LinearRepresentation& rep, const Certificate& cert) {
    return json{{"n", rep.n},
                {"mode", to_string(rep.mode)},
                {"x", rep.x.get_str()},
                {"m", rep.m.get_str()},
                {"a", rep.a.get_str()},
                {"j", ints_to_json(rep.j)},
                {"certificate", certificate_to_json(cert)}};
}

std::string render_commuting_square(const FiniteFunction& f, const LinearRepresentation& rep,
                                    const Certificate& cert) {
    std::ostringstream out;
    out << "f : " << (rep.n == 0 ? "(empty)" : f.render()) << "   (n = " << rep.n
        << ", mode " << to_string(rep.mode) << ")\n";
    out << "x = " << rep.x.get_str() << "\n";
    out << "m = " << rep.m.get_str() << "\n";
    out << "a = " << rep.a.get_str() << "\n";
    if (rep.n > 0) {
        out << "j : ";
        for (std::size_t i = 0; i < rep.n; ++i) {
            if (i > 0) out << ", ";
            out << i << " -> " << rep.j[i].get_str();
        }
        out << "\n\n";
        out << "          f\n";
        out << "     i --------> f(i)\n";
        out << "     |            |\n";
        out << "   j |            | j\n";
        out << "     v     *a     v\n";
        out << "   j(i) -------> j(f(i))    (mod " << rep.m.get_str() << ")\n\n";
        for (const CertificateRecord& rec : cert.records) {
            out << "i=" << rec.index << ": f(i)=" << rec.image
                << "  a*j(i) mod m = " << rec.a_j_mod_m.get_str()
                << "  j(f(i)) = " << rec.j_image.get_str();
            if (rec.residual) out << "  residual = " << rec.residual->get_str();
            out << (rec.congruent ? "  ok" : "  MISMATCH") << "\n";
        }
        out << "\n";
    }
    out << "checks: injective=" << yesno(cert.injective) << " ordered=" << yesno(cert.ordered)
        << " congruence=" << yesno(cert.congruence_ok);
    if (cert.identity_ok) out << " identity=" << yesno(*cert.identity_ok);
    out << "\nresult: " << (cert.passed ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace

Int parse_bigint(const std::string& text) {
    std::string trimmed;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) trimmed.push_back(ch);
    }
    if (trimmed.empty()) throw input_error("expected an integer, got empty text");
    std::size_t start = (trimmed[0] == '-' || trimmed[0] == '+') ? 1 : 0;
    if (start == trimmed.size()) throw input_error("cannot parse integer '" + text + "'");
    for (std::size_t k = start; k < trimmed.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(trimmed[k]))) {
            throw input_error("cannot parse integer '" + text + "'");
        }
    }
    return Int(trimmed, 10);
}

json poly_to_json(const IntPoly& p) {
    json arr = json::array();
    for (const Int& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

json certificate_to_json(const Certificate& cert) {
    json records = json::array();
    for (const CertificateRecord& rec : cert.records) {
        json r{{"i", rec.index},
               {"f_i", rec.image},
               {"j_i", rec.j_value.get_str()},
               {"j_f_i", rec.j_image.get_str()},
               {"a_j_i_mod_m", rec.a_j_mod_m.get_str()},
               {"congruent", rec.congruent}};
        r["residual"] = rec.residual ? json(rec.residual->get_str()) : json(nullptr);
        records.push_back(std::move(r));
    }
    return json{{"injective", cert.injective},
                {"ordered", cert.ordered},
                {"congruence_ok", cert.congruence_ok},
                {"identity_ok", cert.identity_ok ? json(*cert.identity_ok) : json(nullptr)},
                {"passed", cert.passed},
                {"records", std::move(records)}};
}

CommandOutput cmd_repr(const std::string& fn_text, const ReprOptions& opt) {
    const FiniteFunction f = FiniteFunction::parse(fn_text);
    std::vector<std::string> diagnostics;

    LinearRepresentation rep;
    if (opt.explicit_x) {
        rep = construct_at(f, *opt.explicit_x);
    } else {
        rep = construct(f, opt.mode);
    }

    const Certificate cert = verify(f, rep);
    if (!cert.passed) {
        throw internal_error("constructed representation failed its own verification");
    }

    if (rep.n == 0) {
        diagnostics.push_back("degenerate: n = 0 yields the trivial representation m = 1");
    } else if (rep.mode == RepMode::Tight) {
        const Int bound = threshold(row_polynomials(f));
        diagnostics.push_back("bound-derived threshold is " + bound.get_str() +
                              "; tight scan chose x = " + rep.x.get_str() +
                              " (overshoot factor " + overshoot_factor(bound, rep.x) + ")");
    }

    CommandOutput out;
    out.envelope = make_envelope("repr", fn_text, repr_result(rep, cert), diagnostics);
    out.human = render_commuting_square(f, rep, cert);
    for (const std::string& d : diagnostics) out.human += "note: " + d + "\n";
    return out;
}

CommandOutput cmd_verify(const std::string& fn_text, const std::string& m_text,
                         const std::string& a_text, const std::string& j_text) {
    const FiniteFunction f = FiniteFunction::parse(fn_text);
    const Int m = parse_bigint(m_text);
    if (m < 1) throw input_error("modulus m must be a positive integer");
    Int a = parse_bigint(a_text);
    a = ((a % m) + m) % m;
    std::vector<Int> j = parse_bigint_list(j_text);
    if (j.size() != f.size()) {
        std::ostringstream msg;
        msg << "j has " << j.size() << " values but the function has n = " << f.size();
        throw input_error(msg.str());
    }

    LinearRepresentation rep;
    rep.n = f.size();
    rep.m = m;
    rep.a = a;
    rep.x = a;
    rep.j = std::move(j);
    rep.mode = RepMode::UserSupplied;

    const Certificate cert = verify(f, rep);

    // first failing index, scanned check by check in the order the checks
    // are defined: range, injectivity, congruence
    json first_failure = nullptr;
    if (!cert.passed) {
        for (std::size_t i = 0; i < rep.n && first_failure.is_null(); ++i) {
            if (rep.j[i] < 0 || rep.j[i] >= rep.m) {
                first_failure = json{{"check", "range"}, {"index", i}};
            }
        }
        for (std::size_t i = 0; i < rep.n && first_failure.is_null(); ++i) {
            for (std::size_t k = 0; k < i && first_failure.is_null(); ++k) {
                if (rep.j[k] == rep.j[i]) {
                    first_failure = json{{"check", "injectivity"}, {"index", i}};
                }
            }
        }
        for (std::size_t i = 0; i < rep.n && first_failure.is_null(); ++i) {
            if (!cert.records[i].congruent) {
                first_failure = json{{"check", "congruence"}, {"index", i}};
            }
        }
    }

    json result{{"n", rep.n},
                {"m", rep.m.get_str()},
                {"a", rep.a.get_str()},
                {"j", ints_to_json(rep.j)},
                {"valid", cert.passed},
                {"first_failure", first_failure},
                {"certificate", certificate_to_json(cert)}};

    CommandOutput out;
    out.envelope = make_envelope("verify", fn_text, std::move(result), {});
    std::ostringstream human;
    if (cert.passed) {
        human << "valid: j(f(i)) = " << rep.a.get_str() << " * j(i)  (mod " << rep.m.get_str()
              << ") holds for all i, and j is injective\n";
    } else {
        human << "INVALID at index " << first_failure["index"] << " ("
              << first_failure["check"].get<std::string>() << " check failed)\n";
    }
    out.human = human.str();
    out.exit_code = cert.passed ? 0 : 1;
    return out;
}

CommandOutput cmd_charpoly(const std::string& fn_text) {
    const FiniteFunction f = FiniteFunction::parse(fn_text);
    const PolyMatrix chi = char_matrix(func_matrix(f));
    const IntPoly cp = determinant(chi);
    const PolyMatrix adj = adjugate(chi);

    json adj_json = json::array();
    for (std::size_t i = 0; i < adj.dim(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < adj.dim(); ++k) row.push_back(poly_to_json(adj.at(i, k)));
        adj_json.push_back(std::move(row));
    }
    json result{{"n", f.size()}, {"char_poly", poly_to_json(cp)}, {"adjugate", adj_json}};

    CommandOutput out;
    out.envelope = make_envelope("charpoly", fn_text, std::move(result), {});
    std::ostringstream human;
    human << "char_poly = " << cp.to_string() << "\n";
    human << "adjugate of xI - A (entries as coefficient lists, lowest degree first):\n";
    for (std::size_t i = 0; i < adj.dim(); ++i) {
        human << "  row " << i << ":";
        for (std::size_t k = 0; k < adj.dim(); ++k) human << " " << adj.at(i, k).to_string();
        human << "\n";
    }
    out.human = human.str();
    return out;
}

CommandOutput cmd_minimal(const std::string& fn_text, const MinimalOptions& opt) {
    const FiniteFunction f = FiniteFunction::parse(fn_text);
    SearchBudget budget;
    budget.max_m = opt.max_m;
    const SearchOutcome outcome = search_minimal(f, budget);

    const LinearRepresentation tight = construct(f, XChoice::Tight);
    std::vector<std::string> diagnostics;
    if (outcome.assignment_cap_hit) {
        diagnostics.push_back("assignment budget exhausted after " +
                              std::to_string(outcome.assignments_used) + " nodes");
    }

    json result{{"n", f.size()},
                {"found", outcome.found()},
                {"largest_m_searched", outcome.largest_m_searched.get_str()},
                {"assignments_used", outcome.assignments_used},
                {"constructive_m", tight.m.get_str()},
                {"constructive_x", tight.x.get_str()}};

    CommandOutput out;
    std::ostringstream human;
    if (outcome.found()) {
        const LinearRepresentation& rep = *outcome.rep;
        const Certificate cert = verify(f, rep);
        if (!cert.passed) throw internal_error("minimal search produced an invalid representation");
        result["m"] = rep.m.get_str();
        result["a"] = rep.a.get_str();
        result["j"] = ints_to_json(rep.j);
        result["verified"] = true;
        human << "minimal m = " << rep.m.get_str() << ", a = " << rep.a.get_str() << ", j = (";
        for (std::size_t i = 0; i < rep.j.size(); ++i) {
            if (i > 0) human << ", ";
            human << rep.j[i].get_str();
        }
        human << ")\n";
        human << "constructive (tight) m = " << tight.m.get_str() << " at x = "
              << tight.x.get_str() << "\n";
    } else {
        human << "not found: no linear representation with m <= "
              << outcome.largest_m_searched.get_str() << "\n";
        human << "constructive (tight) m = " << tight.m.get_str() << " at x = "
              << tight.x.get_str() << "\n";
        out.exit_code = 4;
    }
    out.envelope = make_envelope("minimal", fn_text, std::move(result), diagnostics);
    out.human = human.str();
    return out;
}

CommandOutput cmd_batch(const BatchOptions& opt) {
    FunctionEnumerator enumerator(opt.n);  // refuses n above the cap

    std::ostringstream csv;
    csv << "f,x,m,a,j,verified";
    if (opt.with_minimal) csv << ",minimal_m";
    csv << "\n";

    std::size_t count = 0;
    std::size_t verified = 0;
    std::size_t minimal_not_found = 0;
    while (auto f = enumerator.next()) {
        const LinearRepresentation rep = construct(*f, opt.mode);
        const Certificate cert = verify(*f, rep);
        ++count;
        if (cert.passed) ++verified;

        csv << '"' << f->render() << '"' << ',' << rep.x.get_str() << ',' << rep.m.get_str()
            << ',' << rep.a.get_str() << ',' << '"';
        for (std::size_t i = 0; i < rep.j.size(); ++i) {
            if (i > 0) csv << ';';
            csv << rep.j[i].get_str();
        }
        csv << '"' << ',' << (cert.passed ? "true" : "false");
        if (opt.with_minimal) {
            csv << ',';
            if (f->size() == 0) {
                ++minimal_not_found;  // search requires n >= 1
            } else {
                const SearchOutcome outcome = search_minimal(*f);
                if (outcome.found()) {
                    csv << outcome.rep->m.get_str();
                } else {
                    ++minimal_not_found;
                }
            }
        }
        csv << "\n";
    }

    const std::size_t failures = count - verified;
    json result{{"n", opt.n},
                {"mode", opt.mode == XChoice::BoundDerived ? "bound" : "tight"},
                {"with_minimal", opt.with_minimal},
                {"functions", count},
                {"verified", verified},
                {"verification_failures", failures},
                {"out", opt.out_path ? json(*opt.out_path) : json(nullptr)}};
    if (opt.with_minimal) result["minimal_not_found"] = minimal_not_found;

    CommandOutput out;
    out.envelope = make_envelope("batch", "", std::move(result), {});
    std::ostringstream human;
    human << "batch n=" << opt.n << ": " << count << " functions, " << verified << " verified, "
          << failures << " failures\n";
    out.human = human.str();

    if (opt.out_path) {
        std::ofstream file(*opt.out_path);
        if (!file) throw input_error("cannot write to '" + *opt.out_path + "'");
        file << csv.str();
        if (!file.good()) throw input_error("write failed for '" + *opt.out_path + "'");
    } else {
        out.csv = csv.str();
    }

    if (failures > 0) {
        throw internal_error("batch: " + std::to_string(failures) +
                             " constructed representations failed verification");
    }
    return out;
}

}  // namespace linrep::cli
