#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ripsym/geometry.hpp"
#include "ripsym/persistence.hpp"
#include "ripsym/rng.hpp"

namespace ripsym {

struct AnalysisConfig {
    /// Fixed neighborhood radius on the processed (recentered, optionally
    /// normalized) scale. When unset, the radius is the `quantile` of the
    /// positive pairwise distances.
    std::optional<double> epsilon;
    double quantile = 0.05;
    /// Rescale the recentered cloud to [0,1] x [0,1] before any geometry.
    bool normalize = true;
    std::uint64_t seed = 0;
    /// Scale cap for the diagnostic barcode (share of the distance
    /// distribution explored by the filtration).
    double barcode_quantile = 0.20;
    bool with_barcode = false;
};

struct AnalysisResult {
    std::string variable;
    double epsilon = 0.0;
    double area_v = 0.0;        // Area of the complex
    double area_box = 0.0;      // Area of the reference box
    double rho_geom = 0.0;      // 1 - area_v / area_box, clamped to [0,1]
    double s_geom = 0.0;        // area_symdiff / (2 area_v), clamped to [0,1]
    double area_symdiff = 0.0;
    std::size_t triangle_count = 0;
    std::size_t edge_count = 0;
    bool degenerate = false;
    std::string diagnostic;
    std::optional<Barcode> barcode;

    // geometric realizations kept for rendering and reports
    PolygonSet complex_region;
    PolygonSet reflection_region;
    PolygonSet symdiff_region;
};

enum class ModelName { linear, circle, connected_circles, ishigami };

struct ModelSpec {
    ModelName name = ModelName::linear;
    std::size_t n = 1000;
    std::uint64_t seed = 1;
};

struct Dataset {
    std::vector<std::string> input_names;
    std::vector<std::vector<double>> inputs;  // one vector per input column
    std::vector<double> output;
    std::vector<double> analytic_first_order;  // empty when unknown
};

struct SobolEstimate {
    std::vector<double> first_order;
    std::size_t n_mc = 0;
    std::vector<double> std_err;  // jackknife
};

/// Symmetric-difference index S = area_symdiff / (2 area_v), clamped to
/// [0,1]; zero for an empty complex.
double geometric_index(double area_symdiff, double area_v);

/// Blank-space index rho = 1 - area_v / area_box, clamped to [0,1].
double geometric_correlation(double area_v, double area_box);

/// Full per-variable pipeline: recenter, optionally normalize, resolve the
/// radius, build the Rips complex, reflect it through the output mid-line
/// and score the symmetric difference.
AnalysisResult analyze_variable(std::span<const double> xs, std::span<const double> ys,
                                const AnalysisConfig& cfg, std::string variable_name = "X");

/// One AnalysisResult per input column, columns analyzed independently.
std::vector<AnalysisResult> analyze_dataset(const std::vector<std::vector<double>>& inputs,
                                            std::span<const double> output, const AnalysisConfig& cfg,
                                            std::span<const std::string> names = {});

ModelName model_from_string(const std::string& name);
std::string to_string(ModelName name);

/// Benchmark generators. Reproducible per seed; column streams are derived
/// as seed xor column index.
Dataset generate_model(const ModelSpec& spec);

/// Response evaluator, present only for models where the output is a
/// function of the inputs (linear, ishigami).
using ModelFunction = std::function<double(std::span<const double>)>;

/// Pick-freeze first-order Sobol estimator with jackknife standard errors.
/// `sample(col, rng)` draws one value of input column col; `f` evaluates
/// the response.
SobolEstimate sobol_pick_freeze(std::size_t p, const std::function<double(std::size_t, Rng&)>& sample,
                                const ModelFunction& f, std::size_t n_mc, std::uint64_t seed);

/// Sobol oracle for the named model; throws invalid_input for the circle
/// models, whose response is a relation rather than a function of the
/// inputs.
SobolEstimate sobol_monte_carlo(const ModelSpec& spec, std::size_t n_mc);

}  // namespace ripsym
