#include <mimlab/error.hpp>
#include <mimlab/width.hpp>

#include <json.hpp>

namespace mimlab
{
    auto to_string(const Rational & r) -> std::string
    {
        if (r.denominator() == 1)
            return std::to_string(r.numerator());
        return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
    }

    auto to_string(WidthMode mode) -> std::string
    {
        switch (mode) {
        case WidthMode::exact: return "exact";
        case WidthMode::upper: return "upper";
        case WidthMode::lower: return "lower";
        }
        return "?";
    }

    auto evaluate_decomposition(const Graph & g, const BranchDecomposition & t) -> WidthReport
    {
        WidthReport report;
        report.mode = WidthMode::upper;
        report.value = -1;
        for (auto & cut : cuts(t, g)) {
            auto matching = max_induced_matching_cut(g, cut.a_side);
            if (matching.size() > report.value) {
                report.value = matching.size();
                report.critical_cut = std::move(cut);
                report.witness_matching = std::move(matching);
            }
        }
        report.decomposition = t;
        return report;
    }

    auto degeneracy_bound_from(int tw_lb, int degeneracy) -> Rational
    {
        return Rational(tw_lb, 3 * (degeneracy + 1));
    }

    auto mimw_lower_degeneracy(const Graph & g, int tw_limit) -> DegeneracyTreewidthBound
    {
        DegeneracyTreewidthBound result;
        result.treewidth = treewidth_exact(g, tw_limit).value;
        result.degeneracy = degeneracy(g).d;
        result.bound = degeneracy_bound_from(result.treewidth, result.degeneracy);
        auto num = result.bound.numerator(), den = result.bound.denominator();
        result.integer_bound = static_cast<int>((num + den - 1) / den);
        return result;
    }

    auto to_json(const WidthReport & report) -> std::string
    {
        nlohmann::ordered_json j;
        j["value"] = report.value;
        j["mode"] = to_string(report.mode);
        j["decomposition"] = report.decomposition ? nlohmann::ordered_json(report.decomposition->to_string()) : nlohmann::ordered_json(nullptr);
        j["critical_cut_a_side"] = report.critical_cut.a_side;
        auto edges = nlohmann::ordered_json::array();
        for (auto e : report.witness_matching.edges)
            edges.push_back({e.u, e.v});
        j["matching_edges"] = std::move(edges);
        return j.dump();
    }
}
