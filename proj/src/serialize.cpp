#include "vat/serialize.hpp"

#include <sstream>

namespace vat {

Json to_json(const Ratio& r) { return Json{{"num", r.num()}, {"den", r.den()}}; }

Json to_json(const AttackResult& result) {
    return Json{{"measure", measure_name(result.measure)},
                {"value", to_json(result.value)},
                {"witness", result.witness.to_vector()},
                {"residual", result.residual},
                {"largest_component", result.largest_component}};
}

Json to_json(const BicliqueWitness& w) {
    return Json{{"side_of_A", side_name(w.side_of_a)},
                {"A", w.a.to_vector()},
                {"B", w.b.to_vector()}};
}

Json to_json(const LemmaIdentityReport& report) {
    return Json{{"holds", report.holds},
                {"lhs", to_json(report.lhs)},
                {"rhs", to_json(report.rhs)}};
}

Json to_json(const LemmaBoundsReport& report) {
    return Json{{"holds", report.holds}, {"k", report.k}, {"uvat", to_json(report.uvat)}};
}

Json to_json(const ReductionReport& report) {
    Json j{{"n", report.side_size},
           {"uvat", to_json(report.uvat)},
           {"k_exact", nullptr},
           {"bk_ratio", to_json(report.bk_ratio)},
           {"lower_bound", to_json(report.lower_bound)},
           {"upper_bound", nullptr},
           {"extracted", to_json(report.extracted)},
           {"alpha", nullptr},
           {"r", nullptr}};
    if (report.k_exact) j["k_exact"] = *report.k_exact;
    if (report.upper_bound) j["upper_bound"] = to_json(*report.upper_bound);
    if (report.alpha) j["alpha"] = to_json(*report.alpha);
    if (report.r) j["r"] = to_json(*report.r);
    return j;
}

namespace {

std::string join_ids(const std::vector<int>& ids) {
    std::ostringstream out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i != 0) out << ' ';
        out << ids[i];
    }
    return out.str();
}

}  // namespace

std::string to_text(const AttackResult& result) {
    std::ostringstream out;
    out << "measure: " << measure_name(result.measure) << '\n'
        << "value: " << result.value << '\n'
        << "witness: " << join_ids(result.witness.to_vector()) << '\n'
        << "residual: " << result.residual << '\n'
        << "largest_component: " << result.largest_component << '\n';
    return out.str();
}

std::string to_text(const BicliqueWitness& w) {
    std::ostringstream out;
    out << "side of A: " << side_name(w.side_of_a) << '\n'
        << "A: " << join_ids(w.a.to_vector()) << '\n'
        << "B: " << join_ids(w.b.to_vector()) << '\n';
    return out.str();
}

std::string to_text(const ReductionReport& report) {
    std::ostringstream out;
    out << "n: " << report.side_size << '\n' << "uvat: " << report.uvat << '\n';
    if (report.k_exact) {
        out << "k_exact: " << *report.k_exact << '\n';
    } else {
        out << "k_exact: not computed\n";
    }
    out << "bk_ratio: " << report.bk_ratio << '\n'
        << "lower_bound: " << report.lower_bound << '\n';
    if (report.upper_bound) {
        out << "upper_bound: " << *report.upper_bound << '\n';
    } else {
        out << "upper_bound: unavailable (no alpha)\n";
    }
    out << "extracted biclique:\n" << to_text(report.extracted);
    if (report.alpha) out << "alpha: " << *report.alpha << '\n';
    if (report.r) out << "r: " << *report.r << '\n';
    return out.str();
}

}  // namespace vat
