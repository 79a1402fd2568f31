#include "ripsym/sensitivity.hpp"

#include <algorithm>
#include <cmath>

#include "ripsym/complex.hpp"
#include "ripsym/symmetry.hpp"

namespace ripsym {

double geometric_index(double area_symdiff, double area_v) {
    if (area_symdiff < 0.0 || area_v < 0.0) throw invalid_input("geometric_index: negative area");
    if (area_v == 0.0) return 0.0;
    return std::clamp(area_symdiff / (2.0 * area_v), 0.0, 1.0);
}

double geometric_correlation(double area_v, double area_box) {
    if (area_v < 0.0) throw invalid_input("geometric_correlation: negative area");
    if (!(area_box > 0.0)) throw invalid_input("geometric_correlation: reference box has zero area");
    return std::clamp(1.0 - area_v / area_box, 0.0, 1.0);
}

AnalysisResult analyze_variable(std::span<const double> xs, std::span<const double> ys,
                                const AnalysisConfig& cfg, std::string variable_name) {
    if (xs.size() != ys.size()) throw invalid_input("analyze_variable: xs and ys differ in length");
    if (xs.size() < 10) throw invalid_input("analyze_variable: need at least 10 points");

    AnalysisResult res;
    res.variable = std::move(variable_name);

    RecenterResult rc = recenter(xs, ys);
    double w = *std::max_element(rc.xs.begin(), rc.xs.end());
    double h = *std::max_element(rc.ys.begin(), rc.ys.end());
    if (w <= 0.0 || h <= 0.0) {
        res.degenerate = true;
        res.diagnostic = "degenerate input: constant xs or ys give a zero-area reference box";
        return res;
    }
    if (cfg.normalize) {
        for (double& v : rc.xs) v /= w;
        for (double& v : rc.ys) v /= h;
    } else if (std::max(w, h) > kCoordinateLimit) {
        throw invalid_input("analyze_variable: data range exceeds the geometry kernel limit; "
                            "enable normalization");
    }

    std::vector<Point2> pts;
    pts.reserve(rc.xs.size());
    for (std::size_t i = 0; i < rc.xs.size(); ++i) pts.emplace_back(rc.xs[i], rc.ys[i]);

    BBox box = bounding_box(pts);
    res.area_box = box.area();

    res.epsilon = cfg.epsilon ? *cfg.epsilon : epsilon_from_quantile(pts, cfg.quantile);
    if (!(res.epsilon > 0.0)) throw invalid_input("analyze_variable: resolved epsilon is not positive");

    NeighborhoodGraph g = build_neighborhood_graph(pts, res.epsilon);
    RipsComplex complex = rips_expansion(g);
    res.edge_count = g.edges.size();
    res.triangle_count = complex.triangles.size();

    if (cfg.with_barcode) {
        double eps_max = epsilon_from_quantile(pts, cfg.barcode_quantile);
        res.barcode = compute_barcode(build_filtration(pts, eps_max));
    }

    std::vector<Triangle2> tris = realize_triangles(complex);
    if (tris.empty()) {
        res.degenerate = true;
        res.diagnostic = "empty complex at the chosen radius; consider a larger epsilon or quantile";
        res.rho_geom = geometric_correlation(0.0, res.area_box);
        return res;
    }

    res.complex_region = union_triangles(tris);
    res.area_v = area(res.complex_region);

    double mid = y_mid(rc.ys);
    res.reflection_region = reflect_polygon_set(res.complex_region, mid);

    res.symdiff_region = boolean_op(res.complex_region, res.reflection_region, BoolOp::SymmetricDifference);
    res.area_symdiff = area(res.symdiff_region);

    res.s_geom = geometric_index(res.area_symdiff, res.area_v);
    res.rho_geom = geometric_correlation(res.area_v, res.area_box);
    return res;
}

std::vector<AnalysisResult> analyze_dataset(const std::vector<std::vector<double>>& inputs,
                                            std::span<const double> output, const AnalysisConfig& cfg,
                                            std::span<const std::string> names) {
    if (inputs.empty()) throw invalid_input("analyze_dataset: no input columns");
    if (!names.empty() && names.size() != inputs.size())
        throw invalid_input("analyze_dataset: name count does not match column count");
    for (const auto& col : inputs)
        if (col.size() != output.size())
            throw invalid_input("analyze_dataset: column lengths do not match the output");

    std::vector<AnalysisResult> out;
    out.reserve(inputs.size());
    for (std::size_t k = 0; k < inputs.size(); ++k) {
        std::string name = names.empty() ? "X" + std::to_string(k + 1) : names[k];
        out.push_back(analyze_variable(inputs[k], output, cfg, std::move(name)));
    }
    return out;
}

}  // namespace ripsym
