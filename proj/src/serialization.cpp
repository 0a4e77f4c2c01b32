#include "deltasq/serialization.hpp"

namespace deltasq {

using nlohmann::json;

json to_json(const QTPoly& p) {
    json arr = json::array();
    for (const QTTerm& tm : p.terms()) arr.push_back({tm.qe, tm.te, to_string(tm.coeff)});
    return arr;
}

QTPoly qtpoly_from_json(const json& j) {
    QTPoly p;
    for (const auto& term : j) {
        p += QTPoly::monomial(rational_from_string(term.at(2).get<std::string>()),
                              term.at(0).get<int>(), term.at(1).get<int>());
    }
    return p;
}

json to_json(const QTRat& r) { return json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

QTRat qtrat_from_json(const json& j) {
    return QTRat(qtpoly_from_json(j.at("num")), qtpoly_from_json(j.at("den")));
}

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

json to_json(const SymFunc& f) {
    json terms = json::array();
    for (const auto& [la, c] : f.coeffs())
        terms.push_back({{"partition", to_json(la)}, {"coeff", to_json(c)}});
    return json{{"degree", f.degree()}, {"basis", "m"}, {"terms", terms}};
}

SymFunc symfunc_from_json(const json& j) {
    if (j.at("basis").get<std::string>() != "m")
        throw std::domain_error("symfunc_from_json: only the monomial basis is stored");
    SymFunc f(j.at("degree").get<int>());
    for (const auto& term : j.at("terms"))
        f.set_coeff(partition_from_json(term.at("partition")), qtrat_from_json(term.at("coeff")));
    return f;
}

namespace {
json one_based_rows(const std::vector<char>& flags) {
    json arr = json::array();
    for (size_t i = 0; i < flags.size(); ++i)
        if (flags[i]) arr.push_back(i + 1);
    return arr;
}
}  // namespace

json to_json(const DecoratedLabelledPath& p) {
    return json{{"area_word", p.path.area_word()},
                {"start", p.path.starts_north() ? "N" : "E"},
                {"drises", one_based_rows(p.drise)},
                {"labels", p.labels}};
}

json to_json(const SchroederPath& p) {
    return json{{"area_word", p.path.area_word()},
                {"start", p.path.starts_north() ? "N" : "E"},
                {"drises", one_based_rows(p.drise)},
                {"dpeaks", one_based_rows(p.dpeak)},
                {"zvals", one_based_rows(p.zval)}};
}

} // namespace deltasq
