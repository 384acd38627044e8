#pragma once

#include "hypcr/assemble.hpp"
#include "hypcr/m0n.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

// Serialization. JSON uses ordered maps and fixed field sets (absent values
// rendered as null, never omitted) so output is byte-stable; rationals are
// always {"num", "den"} integer pairs, polynomials ascending term arrays.

namespace hypcr {

using json = nlohmann::ordered_json;

inline json j_rational(const Rational& x) { return json{{"num", x.num()}, {"den", x.den()}}; }

inline json j_polynomial(const QPolynomial& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms())
        arr.push_back(json{{"exp", j_rational(e)}, {"coeff", c}});
    return arr;
}

inline std::string ident_kind_str(IdentKind k) {
    switch (k) {
        case IdentKind::Full: return "full";
        case IdentKind::Inv: return "inv";
        case IdentKind::Twist: return "twist";
    }
    return "full";
}

inline std::string symmetry_str(CoarseSymmetry s) {
    return s == CoarseSymmetry::TwoFixed ? "two_fixed" : "two_swapped";
}

inline json j_label(const CharacterClass& c) {
    return json{{"modulus", c.modulus}, {"members", c.members}, {"kind", ident_kind_str(c.kind)}};
}

inline json j_sector(const HypSector& s) {
    json j;
    j["stack"] = "hyp";
    j["g"] = s.g;
    j["n"] = 2 * s.g + 2;
    j["N"] = s.N;
    j["full_order"] = s.lift.full_order;
    bool twisted = s.kind == HypSectorKind::Twisted;
    j["k"] = twisted ? json(s.k) : json(nullptr);
    j["a"] = twisted ? json(s.a) : json(nullptr);
    j["label"] = s.label ? j_label(*s.label) : json(nullptr);
    j["lambda"] = s.lambda ? json(*s.lambda) : json(nullptr);
    json coarse;
    coarse["k"] = s.coarse ? json(s.coarse->k) : json(nullptr);
    coarse["symmetry"] = s.coarse ? json(symmetry_str(s.coarse->symmetry)) : json("full");
    coarse["dimension"] = s.coarse_dimension();
    j["coarse"] = coarse;
    j["age"] = j_rational(age_oracle(weight_vector(s)));
    j["exponent_paper"] =
        s.kind == HypSectorKind::Untwisted ? json(nullptr) : j_rational(exponent_paper(s));
    return j;
}

inline json j_sector(const M0nSector& s) {
    json j;
    j["stack"] = "m0n";
    j["g"] = nullptr;
    j["n"] = s.n;
    j["N"] = s.N;
    j["full_order"] = nullptr;
    j["k"] = s.k;
    j["a"] = s.a;
    j["label"] = j_label(s.label);
    j["lambda"] = nullptr;
    json coarse;
    coarse["k"] = s.coarse.k;
    coarse["symmetry"] = symmetry_str(s.coarse.symmetry);
    coarse["dimension"] = s.coarse.dimension();
    j["coarse"] = coarse;
    j["age"] = nullptr;
    j["exponent_paper"] = nullptr;
    return j;
}

inline json j_report(const ReconciliationReport& r) {
    json j;
    j["g"] = r.g;
    json rows = json::array();
    for (const ReconRow& row : r.rows) {
        json jr;
        jr["id"] = row.id;
        jr["N"] = row.N;
        jr["k"] = row.k;
        jr["a"] = row.a;
        jr["exponent_paper"] = j_rational(row.exponent);
        jr["age"] = j_rational(row.age);
        jr["two_age"] = j_rational(row.two_age);
        jr["difference"] = j_rational(row.difference);
        jr["predicted"] = j_rational(row.predicted);
        jr["family"] = row.an_family ? "an" : "n2";
        rows.push_back(jr);
    }
    j["rows"] = rows;
    json totals;
    totals["paper"] = r.totals.paper;
    totals["first_principles"] = r.totals.first_principles;
    totals["corollary_literal"] = r.totals.corollary_literal;
    totals["corollary_clamped"] = r.totals.corollary_clamped;
    j["totals"] = totals;
    j["corollary_note"] = "printed sector count, reported informationally; not asserted";
    return j;
}

// --- LaTeX ---

inline std::string latex_rational(const Rational& x) {
    if (x.is_integer()) return std::to_string(x.num());
    return "\\frac{" + std::to_string(x.num()) + "}{" + std::to_string(x.den()) + "}";
}

inline std::string latex_polynomial(const QPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        if (e.is_zero()) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        if (e == Rational(1))
            out += "q";
        else
            out += "q^{" + latex_rational(e) + "}";
    }
    return out;
}

// --- plain text / CSV tables ---

inline std::string members_str(const std::vector<long long>& ms, char sep = '+') {
    std::string out;
    for (long long m : ms) {
        if (!out.empty()) out += sep;
        out += std::to_string(m);
    }
    return out;
}

inline std::string csv_sectors(const std::vector<HypSector>& sectors) {
    std::string out = "id,N,full_order,k,a,modulus,members,kind,lambda,symmetry,dimension,age\n";
    for (const HypSector& s : sectors) {
        bool tw = s.kind == HypSectorKind::Twisted;
        out += s.id();
        out += "," + std::to_string(s.N);
        out += "," + std::to_string(s.lift.full_order);
        out += "," + (tw ? std::to_string(s.k) : "");
        out += "," + (tw ? std::to_string(s.a) : "");
        out += "," + (s.label ? std::to_string(s.label->modulus) : "");
        out += "," + (s.label ? members_str(s.label->members) : "");
        out += "," + (s.label ? ident_kind_str(s.label->kind) : "");
        out += "," + (s.lambda ? std::string(*s.lambda > 0 ? "+1" : "-1") : "");
        out += "," + (s.coarse ? symmetry_str(s.coarse->symmetry) : "full");
        out += "," + std::to_string(s.coarse_dimension());
        out += "," + age_oracle(weight_vector(s)).str();
        out += "\n";
    }
    return out;
}

inline std::string csv_sectors(const std::vector<M0nSector>& sectors) {
    std::string out = "n,N,k,a,modulus,members,kind,symmetry,dimension\n";
    for (const M0nSector& s : sectors) {
        out += std::to_string(s.n);
        out += "," + std::to_string(s.N);
        out += "," + std::to_string(s.k);
        out += "," + std::to_string(s.a);
        out += "," + std::to_string(s.label.modulus);
        out += "," + members_str(s.label.members);
        out += "," + ident_kind_str(s.label.kind);
        out += "," + symmetry_str(s.coarse.symmetry);
        out += "," + std::to_string(s.coarse.dimension());
        out += "\n";
    }
    return out;
}

namespace detail {

inline std::string pad(const std::string& s, std::size_t w) {
    return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

inline std::string text_table(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return "";
    std::vector<std::size_t> widths(rows[0].size(), 0);
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            if (row[i].size() > widths[i]) widths[i] = row[i].size();
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += "  ";
            line += pad(row[i], widths[i]);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

inline std::string latex_table(const std::vector<std::string>& header,
                               const std::vector<std::vector<std::string>>& rows) {
    std::string out = "\\begin{tabular}{" + std::string(header.size(), 'l') + "}\n\\hline\n";
    std::string h;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) h += " & ";
        h += header[i];
    }
    out += h + " \\\\\n\\hline\n";
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += " & ";
            line += row[i];
        }
        out += line + " \\\\\n";
    }
    out += "\\hline\n\\end{tabular}\n";
    return out;
}

}  // namespace detail

inline std::string text_sectors(const std::vector<HypSector>& sectors) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"id", "N", "ord", "k", "a", "label", "lambda", "coarse", "dim", "age"});
    for (const HypSector& s : sectors) {
        bool tw = s.kind == HypSectorKind::Twisted;
        std::string label = s.label ? "{" + members_str(s.label->members, ',') + "} mod " +
                                          std::to_string(s.label->modulus)
                                    : "-";
        rows.push_back({s.id(), std::to_string(s.N), std::to_string(s.lift.full_order),
                        tw ? std::to_string(s.k) : "-", tw ? std::to_string(s.a) : "-",
                        label, s.lambda ? (*s.lambda > 0 ? "+1" : "-1") : "-",
                        s.coarse ? symmetry_str(s.coarse->symmetry) : "full",
                        std::to_string(s.coarse_dimension()),
                        age_oracle(weight_vector(s)).str()});
    }
    return detail::text_table(rows);
}

inline std::string text_sectors(const std::vector<M0nSector>& sectors) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"N", "k", "a", "label", "coarse", "dim"});
    for (const M0nSector& s : sectors)
        rows.push_back({std::to_string(s.N), std::to_string(s.k), std::to_string(s.a),
                        "{" + members_str(s.label.members, ',') + "} mod " +
                            std::to_string(s.label.modulus),
                        symmetry_str(s.coarse.symmetry), std::to_string(s.coarse.dimension())});
    return detail::text_table(rows);
}

inline std::string text_report(const ReconciliationReport& r) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back(
        {"sector", "N", "k", "a", "exponent", "age", "2*age", "difference", "predicted"});
    for (const ReconRow& row : r.rows)
        rows.push_back({row.id, std::to_string(row.N), std::to_string(row.k),
                        std::to_string(row.a), row.exponent.str(), row.age.str(),
                        row.two_age.str(), row.difference.str(), row.predicted.str()});
    std::string out = "reconciliation g=" + std::to_string(r.g) + "\n";
    out += detail::text_table(rows);
    out += "totals: paper=" + std::to_string(r.totals.paper) +
           " first_principles=" + std::to_string(r.totals.first_principles) +
           " corollary_literal=" + std::to_string(r.totals.corollary_literal) +
           " corollary_clamped=" + std::to_string(r.totals.corollary_clamped) +
           " (corollary reported informationally)\n";
    return out;
}

inline std::string csv_report(const ReconciliationReport& r) {
    std::string out = "id,N,k,a,exponent_paper,age,two_age,difference,predicted,family\n";
    for (const ReconRow& row : r.rows) {
        out += row.id + "," + std::to_string(row.N) + "," + std::to_string(row.k) + "," +
               std::to_string(row.a) + "," + row.exponent.str() + "," + row.age.str() + "," +
               row.two_age.str() + "," + row.difference.str() + "," + row.predicted.str() +
               "," + (row.an_family ? "an" : "n2") + "\n";
    }
    out += "\nkey,value\n";
    out += "total_paper," + std::to_string(r.totals.paper) + "\n";
    out += "total_first_principles," + std::to_string(r.totals.first_principles) + "\n";
    out += "corollary_literal," + std::to_string(r.totals.corollary_literal) + "\n";
    out += "corollary_clamped," + std::to_string(r.totals.corollary_clamped) + "\n";
    return out;
}

inline std::string latex_report(const ReconciliationReport& r) {
    std::vector<std::vector<std::string>> rows;
    for (const ReconRow& row : r.rows)
        rows.push_back({row.id, std::to_string(row.N), std::to_string(row.k),
                        std::to_string(row.a), "$" + latex_rational(row.exponent) + "$",
                        "$" + latex_rational(row.age) + "$",
                        "$" + latex_rational(row.difference) + "$",
                        "$" + latex_rational(row.predicted) + "$"});
    return detail::latex_table(
        {"sector", "$N$", "$k$", "$a$", "exponent", "age", "difference", "predicted"}, rows);
}

inline std::string latex_sectors(const std::vector<HypSector>& sectors) {
    std::vector<std::vector<std::string>> rows;
    for (const HypSector& s : sectors) {
        bool tw = s.kind == HypSectorKind::Twisted;
        rows.push_back({s.id(), std::to_string(s.N), std::to_string(s.lift.full_order),
                        tw ? std::to_string(s.k) : "-", tw ? std::to_string(s.a) : "-",
                        s.label ? "$\\{" + members_str(s.label->members, ',') + "\\} \\bmod " +
                                      std::to_string(s.label->modulus) + "$"
                                : "-",
                        "$" + latex_rational(age_oracle(weight_vector(s))) + "$"});
    }
    return detail::latex_table({"sector", "$N$", "ord", "$k$", "$a$", "label", "age"}, rows);
}

inline std::string latex_sectors(const std::vector<M0nSector>& sectors) {
    std::vector<std::vector<std::string>> rows;
    for (const M0nSector& s : sectors)
        rows.push_back({std::to_string(s.N), std::to_string(s.k), std::to_string(s.a),
                        "$\\{" + members_str(s.label.members, ',') + "\\} \\bmod " +
                            std::to_string(s.label.modulus) + "$",
                        symmetry_str(s.coarse.symmetry)});
    return detail::latex_table({"$N$", "$k$", "$a$", "label", "coarse"}, rows);
}

inline std::string json_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hypcr
