#pragma once

#include <string>

#include <json.hpp>

#include "diffop.hpp"
#include "parser.hpp"

namespace dixq {

// Canonical, parseable coefficient strings: expanded polynomials with
// descending degree, or (num)/(den) for genuine rational functions.

inline std::string scalar_str(const Rational& q) { return q.str(); }
inline bool scalar_atomic(const Rational&) { return true; }

namespace fmt_detail {

template <class K, class CoeffStr, class CoeffAtomic>
std::string poly_str(const Poly<K>& p, const std::string& var, CoeffStr cstr,
                     CoeffAtomic catomic) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        K c = p.coeff(d);
        if (is_zero_value(c)) continue;
        std::string cs = cstr(c);
        std::string term;
        if (d == 0) {
            term = catomic(c) ? cs : "(" + cs + ")";
        } else {
            std::string vp = d == 1 ? var : var + "^" + std::to_string(d);
            if (cs == "1")
                term = vp;
            else if (cs == "-1")
                term = "-" + vp;
            else if (catomic(c))
                term = cs + "*" + vp;
            else
                term = "(" + cs + ")*" + vp;
        }
        if (out.empty())
            out = term;
        else if (!term.empty() && term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

template <class K, class CoeffStr, class CoeffAtomic>
std::string ratfunc_str(const RatFunc<K>& r, const std::string& var, CoeffStr cstr,
                        CoeffAtomic catomic) {
    std::string ns = poly_str(r.num(), var, cstr, catomic);
    if (r.is_polynomial()) return ns;
    std::string ds = poly_str(r.den(), var, cstr, catomic);
    return "(" + ns + ")/(" + ds + ")";
}

} // namespace fmt_detail

inline std::string scalar_str(const RatC1& r) {
    return fmt_detail::ratfunc_str(
        r, "c1", [](const Rational& q) { return scalar_str(q); },
        [](const Rational& q) { return scalar_atomic(q); });
}
inline bool scalar_atomic(const RatC1& r) {
    return r.is_polynomial() && r.num().degree() <= 0;
}

inline std::string scalar_str(const KcSym& r) {
    return fmt_detail::ratfunc_str(
        r, "c2", [](const RatC1& q) { return scalar_str(q); },
        [](const RatC1& q) { return scalar_atomic(q); });
}
inline bool scalar_atomic(const KcSym& r) {
    return r.is_polynomial() && r.num().degree() <= 0 && scalar_atomic(r.num().constant());
}

// Coefficient u_i(n) of an operator, canonical form in the variable n.
template <class K>
std::string coeff_str(const RatFunc<K>& u) {
    return fmt_detail::ratfunc_str(
        u, "n", [](const K& c) { return scalar_str(c); },
        [](const K& c) { return scalar_atomic(c); });
}

template <class K>
std::string op_text(const DiffOp<K>& op) {
    if (op.is_zero()) return "0\n";
    std::string out;
    for (int i = op.i_max(); i >= op.i_min(); --i) {
        RatFunc<K> u = op.coeff(i);
        if (u.is_zero()) continue;
        out += "T^" + std::to_string(i) + ": " + coeff_str(u) + "\n";
    }
    return out;
}

template <class K>
std::string op_latex(const DiffOp<K>& op) {
    if (op.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = op.i_max(); i >= op.i_min(); --i) {
        RatFunc<K> u = op.coeff(i);
        if (u.is_zero()) continue;
        std::string cs = coeff_str(u);
        std::string term;
        if (i == 0)
            term = "\\left(" + cs + "\\right)";
        else {
            std::string tp = "T^{" + std::to_string(i) + "}";
            term = cs == "1" ? tp : "\\left(" + cs + "\\right)" + tp;
        }
        out += first ? term : " + " + term;
        first = false;
    }
    return out;
}

template <class K>
nlohmann::ordered_json op_to_json(const DiffOp<K>& op, const std::string& c1s,
                                  const std::string& c2s, const std::string& as,
                                  const std::string& gs) {
    nlohmann::ordered_json j;
    j["support"] = {op.i_min(), op.i_max()};
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
    for (int i = op.i_max(); i >= op.i_min(); --i) {
        RatFunc<K> u = op.coeff(i);
        if (!u.is_zero()) coeffs[std::to_string(i)] = coeff_str(u);
    }
    j["coeffs"] = coeffs;
    j["curve"] = {{"c1", c1s}, {"c2", c2s}};
    j["params"] = {{"a", as}, {"gamma", gs}};
    return j;
}

template <class K>
DiffOp<K> op_from_json(const nlohmann::json& j, const K& c1, const K& c2) {
    DiffOp<K> op;
    for (const auto& [key, val] : j.at("coeffs").items())
        op.set(std::stoi(key), parse_ratfunc_n<K>(val.template get<std::string>(), c1, c2));
    return op;
}

} // namespace dixq
