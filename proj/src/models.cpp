#include <cmath>
#include <numbers>

#include "ripsym/sensitivity.hpp"

namespace ripsym {

namespace {

constexpr double kPi = std::numbers::pi;

// analytic ANOVA of the Ishigami function (a = 7, b = 0.1)
std::vector<double> ishigami_analytic() {
    const double a = 7.0, b = 0.1;
    const double pi4 = kPi * kPi * kPi * kPi;
    const double v1 = 0.5 * (1.0 + b * pi4 / 5.0) * (1.0 + b * pi4 / 5.0);
    const double v2 = a * a / 8.0;
    const double v13 = b * b * pi4 * pi4 * 8.0 / 225.0;
    const double v = v1 + v2 + v13;
    return {v1 / v, v2 / v, 0.0};
}

double ishigami_f(double x1, double x2, double x3) {
    return std::sin(x1) + 7.0 * std::sin(x2) * std::sin(x2) + 0.1 * x3 * x3 * x3 * x3 * std::sin(x1);
}

}  // namespace

ModelName model_from_string(const std::string& name) {
    if (name == "linear") return ModelName::linear;
    if (name == "circle") return ModelName::circle;
    if (name == "connected_circles") return ModelName::connected_circles;
    if (name == "ishigami") return ModelName::ishigami;
    throw invalid_input("unknown model name: " + name);
}

std::string to_string(ModelName name) {
    switch (name) {
        case ModelName::linear: return "linear";
        case ModelName::circle: return "circle";
        case ModelName::connected_circles: return "connected_circles";
        case ModelName::ishigami: return "ishigami";
    }
    return "?";
}

Dataset generate_model(const ModelSpec& spec) {
    if (spec.n < 10) throw invalid_input("generate_model: need n >= 10");
    const std::size_t n = spec.n;
    Dataset d;
    auto stream = [&](std::size_t col) { return Rng(derive_stream(spec.seed, col)); };

    switch (spec.name) {
        case ModelName::linear: {
            d.input_names = {"X1", "X2", "X3"};
            d.inputs.assign(3, std::vector<double>(n));
            for (std::size_t k = 0; k < 3; ++k) {
                Rng rng = stream(k);
                for (std::size_t i = 0; i < n; ++i) d.inputs[k][i] = rng.uniform(-1.0, 1.0);
            }
            d.output.resize(n);
            for (std::size_t i = 0; i < n; ++i) d.output[i] = 2.0 * d.inputs[0][i] + d.inputs[1][i];
            // Var(2 X1) = 4/3, Var(X2) = 1/3, total 5/3
            d.analytic_first_order = {0.8, 0.2, 0.0};
            break;
        }
        case ModelName::circle: {
            d.input_names = {"X1", "X2"};
            d.inputs.assign(2, std::vector<double>(n));
            d.output.resize(n);
            Rng theta_rng = stream(0);
            Rng r_rng = stream(1);
            Rng noise_rng = stream(2);
            for (std::size_t i = 0; i < n; ++i) {
                double theta = theta_rng.uniform(0.0, 2.0 * kPi);
                double r = r_rng.uniform(0.5, 1.0);
                d.inputs[0][i] = r * std::cos(theta);
                d.output[i] = r * std::sin(theta);
                d.inputs[1][i] = noise_rng.uniform(-1.0, 1.0);
            }
            break;
        }
        case ModelName::connected_circles: {
            // rows cycle through the three circles; X1 carries the circle
            // abscissa, X2 and X3 are independent noise over the X1 span
            d.input_names = {"X1", "X2", "X3"};
            d.inputs.assign(3, std::vector<double>(n));
            d.output.resize(n);
            const double cx[3] = {0.0, 3.5, -4.0};
            const double cy[3] = {0.0, 3.5, 4.0};
            const double rlo[3] = {1.5, 0.5, 1.0};
            const double rhi[3] = {2.5, 1.0, 2.0};
            Rng theta_rng = stream(0);
            Rng r_rng = stream(1);
            Rng noise2 = stream(2);
            Rng noise3 = stream(3);
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t c = i % 3;
                double theta = theta_rng.uniform(0.0, 2.0 * kPi);
                double r = r_rng.uniform(rlo[c], rhi[c]);
                d.inputs[0][i] = cx[c] + r * std::cos(theta);
                d.output[i] = cy[c] + r * std::sin(theta);
                d.inputs[1][i] = noise2.uniform(-6.0, 6.0);
                d.inputs[2][i] = noise3.uniform(-6.0, 6.0);
            }
            break;
        }
        case ModelName::ishigami: {
            d.input_names = {"X1", "X2", "X3"};
            d.inputs.assign(3, std::vector<double>(n));
            for (std::size_t k = 0; k < 3; ++k) {
                Rng rng = stream(k);
                for (std::size_t i = 0; i < n; ++i) d.inputs[k][i] = rng.uniform(-kPi, kPi);
            }
            d.output.resize(n);
            for (std::size_t i = 0; i < n; ++i)
                d.output[i] = ishigami_f(d.inputs[0][i], d.inputs[1][i], d.inputs[2][i]);
            d.analytic_first_order = ishigami_analytic();
            break;
        }
    }
    return d;
}

SobolEstimate sobol_pick_freeze(std::size_t p, const std::function<double(std::size_t, Rng&)>& sample,
                                const ModelFunction& f, std::size_t n_mc, std::uint64_t seed) {
    if (n_mc < 1000) throw invalid_input("sobol_pick_freeze: need n_mc >= 1000");
    if (p == 0) throw invalid_input("sobol_pick_freeze: no inputs");

    Rng rng(derive_stream(seed, 0x50b01));
    std::vector<std::vector<double>> a(n_mc, std::vector<double>(p));
    std::vector<std::vector<double>> b(n_mc, std::vector<double>(p));
    for (std::size_t i = 0; i < n_mc; ++i)
        for (std::size_t k = 0; k < p; ++k) {
            a[i][k] = sample(k, rng);
            b[i][k] = sample(k, rng);
        }

    std::vector<double> ya(n_mc);
    for (std::size_t i = 0; i < n_mc; ++i) ya[i] = f(a[i]);

    SobolEstimate est;
    est.n_mc = n_mc;
    est.first_order.resize(p);
    est.std_err.resize(p);

    std::vector<double> yc(n_mc), row(p);
    for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t i = 0; i < n_mc; ++i) {
            row = b[i];
            row[k] = a[i][k];  // freeze column k from the first matrix
            yc[i] = f(row);
        }
        // Janon estimator: shared empirical mean and variance of both runs
        double s_prod = 0, s_sum = 0, s_sq = 0;
        for (std::size_t i = 0; i < n_mc; ++i) {
            s_prod += ya[i] * yc[i];
            s_sum += ya[i] + yc[i];
            s_sq += ya[i] * ya[i] + yc[i] * yc[i];
        }
        const double n = double(n_mc);
        auto index_from = [](double sp, double ss, double sq, double m) {
            double mean = ss / (2.0 * m);
            double var = sq / (2.0 * m) - mean * mean;
            return var > 0 ? (sp / m - mean * mean) / var : 0.0;
        };
        double s_full = index_from(s_prod, s_sum, s_sq, n);
        est.first_order[k] = s_full;

        // delete-one jackknife on the paired samples
        double acc = 0;
        std::vector<double> loo(n_mc);
        for (std::size_t i = 0; i < n_mc; ++i) {
            double sp = s_prod - ya[i] * yc[i];
            double ss = s_sum - ya[i] - yc[i];
            double sq = s_sq - ya[i] * ya[i] - yc[i] * yc[i];
            loo[i] = index_from(sp, ss, sq, n - 1);
            acc += loo[i];
        }
        double mean_loo = acc / n;
        double var_jack = 0;
        for (std::size_t i = 0; i < n_mc; ++i) var_jack += (loo[i] - mean_loo) * (loo[i] - mean_loo);
        var_jack *= (n - 1.0) / n;
        est.std_err[k] = std::sqrt(var_jack);
    }
    return est;
}

SobolEstimate sobol_monte_carlo(const ModelSpec& spec, std::size_t n_mc) {
    switch (spec.name) {
        case ModelName::linear:
            return sobol_pick_freeze(
                3, [](std::size_t, Rng& r) { return r.uniform(-1.0, 1.0); },
                [](std::span<const double> x) { return 2.0 * x[0] + x[1]; }, n_mc, spec.seed);
        case ModelName::ishigami:
            return sobol_pick_freeze(
                3, [](std::size_t, Rng& r) { return r.uniform(-kPi, kPi); },
                [](std::span<const double> x) { return ishigami_f(x[0], x[1], x[2]); }, n_mc, spec.seed);
        case ModelName::circle:
        case ModelName::connected_circles:
            throw invalid_input("sobol_monte_carlo: " + to_string(spec.name) +
                                " has no functional response to evaluate");
    }
    throw invalid_input("sobol_monte_carlo: unknown model");
}

}  // namespace ripsym
