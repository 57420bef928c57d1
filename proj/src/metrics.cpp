#include "move/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "move/errors.hpp"

namespace move {

namespace {

struct Plane {
    int w = 0, h = 0;
    std::vector<double> v;

    Plane() = default;
    Plane(int w_, int h_) : w(w_), h(h_), v(static_cast<std::size_t>(w_) * h_, 0.0) {}

    double& at(int y, int x) { return v[static_cast<std::size_t>(y) * w + x]; }
    double at(int y, int x) const { return v[static_cast<std::size_t>(y) * w + x]; }
};

Plane luminance_plane(const ImageBuffer& img, double scale = 1.0) {
    Plane p(img.width, img.height);
    for (std::size_t i = 0; i < p.v.size(); ++i) {
        const double* px = img.data.data() + i * 3;
        p.v[i] = scale * (0.299 * px[0] + 0.587 * px[1] + 0.114 * px[2]);
    }
    return p;
}

Plane combine_channels(const ImageBuffer& img, double cr, double cg, double cb, double scale) {
    Plane p(img.width, img.height);
    for (std::size_t i = 0; i < p.v.size(); ++i) {
        const double* px = img.data.data() + i * 3;
        p.v[i] = scale * (cr * px[0] + cg * px[1] + cb * px[2]);
    }
    return p;
}

// Separable valid-region filtering: output shrinks by (taps - 1) per axis.
Plane filter_valid(const Plane& p, const std::vector<double>& k) {
    const int t = static_cast<int>(k.size());
    Plane horiz(p.w - t + 1, p.h);
    for (int y = 0; y < p.h; ++y) {
        for (int x = 0; x < horiz.w; ++x) {
            double acc = 0.0;
            for (int i = 0; i < t; ++i) acc += k[static_cast<std::size_t>(i)] * p.at(y, x + i);
            horiz.at(y, x) = acc;
        }
    }
    Plane out(horiz.w, p.h - t + 1);
    for (int y = 0; y < out.h; ++y) {
        for (int x = 0; x < out.w; ++x) {
            double acc = 0.0;
            for (int i = 0; i < t; ++i) acc += k[static_cast<std::size_t>(i)] * horiz.at(y + i, x);
            out.at(y, x) = acc;
        }
    }
    return out;
}

const std::vector<double>& gaussian11() {
    static const std::vector<double> k = [] {
        std::vector<double> g(11);
        double sum = 0.0;
        for (int i = 0; i < 11; ++i) {
            const double d = i - 5.0;
            g[static_cast<std::size_t>(i)] = std::exp(-(d * d) / (2.0 * 1.5 * 1.5));
            sum += g[static_cast<std::size_t>(i)];
        }
        for (auto& v : g) v /= sum;
        return g;
    }();
    return k;
}

// 2x2 block average with stride 2; odd trailing row/column dropped.
Plane decimate2(const Plane& p) {
    Plane out(p.w / 2, p.h / 2);
    for (int y = 0; y < out.h; ++y)
        for (int x = 0; x < out.w; ++x)
            out.at(y, x) =
                0.25 * (p.at(2 * y, 2 * x) + p.at(2 * y, 2 * x + 1) + p.at(2 * y + 1, 2 * x) +
                        p.at(2 * y + 1, 2 * x + 1));
    return out;
}

Plane average_pool(const Plane& p, int f) {
    if (f <= 1) return p;
    Plane out(p.w / f, p.h / f);
    const double inv = 1.0 / (f * f);
    for (int y = 0; y < out.h; ++y)
        for (int x = 0; x < out.w; ++x) {
            double acc = 0.0;
            for (int dy = 0; dy < f; ++dy)
                for (int dx = 0; dx < f; ++dx) acc += p.at(y * f + dy, x * f + dx);
            out.at(y, x) = acc * inv;
        }
    return out;
}

// 1/3-normalized Prewitt pair on the interior (valid region).
void prewitt_valid(const Plane& p, Plane& gx, Plane& gy) {
    gx = Plane(p.w - 2, p.h - 2);
    gy = Plane(p.w - 2, p.h - 2);
    constexpr double third = 1.0 / 3.0;
    for (int y = 0; y < gx.h; ++y) {
        for (int x = 0; x < gx.w; ++x) {
            double sx = 0.0, sy = 0.0;
            for (int d = 0; d < 3; ++d) {
                sx += p.at(y + d, x) - p.at(y + d, x + 2);
                sy += p.at(y, x + d) - p.at(y + 2, x + d);
            }
            gx.at(y, x) = sx * third;
            gy.at(y, x) = sy * third;
        }
    }
}

Plane gradient_magnitude(const Plane& p) {
    Plane gx, gy;
    prewitt_valid(p, gx, gy);
    Plane out(gx.w, gx.h);
    for (std::size_t i = 0; i < out.v.size(); ++i)
        out.v[i] = std::sqrt(gx.v[i] * gx.v[i] + gy.v[i] * gy.v[i]);
    return out;
}

void sobel_valid(const Plane& p, Plane& gx, Plane& gy) {
    gx = Plane(p.w - 2, p.h - 2);
    gy = Plane(p.w - 2, p.h - 2);
    for (int y = 0; y < gx.h; ++y) {
        for (int x = 0; x < gx.w; ++x) {
            gx.at(y, x) = (p.at(y, x + 2) - p.at(y, x)) + 2.0 * (p.at(y + 1, x + 2) - p.at(y + 1, x)) +
                          (p.at(y + 2, x + 2) - p.at(y + 2, x));
            gy.at(y, x) = (p.at(y + 2, x) - p.at(y, x)) + 2.0 * (p.at(y + 2, x + 1) - p.at(y, x + 1)) +
                          (p.at(y + 2, x + 2) - p.at(y, x + 2));
        }
    }
}

// --- metric bodies -----------------------------------------------------

double mse_rgb(const ImageBuffer& a, const ImageBuffer& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        const double d = a.data[i] - b.data[i];
        acc += d * d;
    }
    return acc / static_cast<double>(a.data.size());
}

double psnr_luma(const ImageBuffer& a, const ImageBuffer& b) {
    const Plane ya = luminance_plane(a), yb = luminance_plane(b);
    double acc = 0.0;
    for (std::size_t i = 0; i < ya.v.size(); ++i) {
        const double d = ya.v[i] - yb.v[i];
        acc += d * d;
    }
    const double mse = acc / static_cast<double>(ya.v.size());
    if (mse < 1e-8) return 80.0;
    return -10.0 * std::log10(mse);
}

constexpr double kSsimC1 = 0.01 * 0.01;
constexpr double kSsimC2 = 0.03 * 0.03;

struct SsimStats {
    double mean_ssim = 0.0;
    double mean_cs = 0.0;
};

SsimStats ssim_stats(const Plane& x, const Plane& y) {
    const auto& k = gaussian11();
    Plane xx(x.w, x.h), yy(x.w, x.h), xy(x.w, x.h);
    for (std::size_t i = 0; i < x.v.size(); ++i) {
        xx.v[i] = x.v[i] * x.v[i];
        yy.v[i] = y.v[i] * y.v[i];
        xy.v[i] = x.v[i] * y.v[i];
    }
    const Plane mu1 = filter_valid(x, k), mu2 = filter_valid(y, k);
    const Plane m11 = filter_valid(xx, k), m22 = filter_valid(yy, k), m12 = filter_valid(xy, k);

    double ssim_acc = 0.0, cs_acc = 0.0;
    for (std::size_t i = 0; i < mu1.v.size(); ++i) {
        const double a = mu1.v[i], b = mu2.v[i];
        const double s1 = m11.v[i] - a * a;
        const double s2 = m22.v[i] - b * b;
        const double s12 = m12.v[i] - a * b;
        const double l = (2.0 * a * b + kSsimC1) / (a * a + b * b + kSsimC1);
        const double cs = (2.0 * s12 + kSsimC2) / (s1 + s2 + kSsimC2);
        ssim_acc += l * cs;
        cs_acc += cs;
    }
    const double n = static_cast<double>(mu1.v.size());
    return {ssim_acc / n, cs_acc / n};
}

double ssim_metric(const ImageBuffer& img, const ImageBuffer& target) {
    return ssim_stats(luminance_plane(img), luminance_plane(target)).mean_ssim;
}

// Canonical five-scale weights; with fewer usable scales the leading
// weights are renormalized to sum to one.
double ms_ssim_metric(const ImageBuffer& img, const ImageBuffer& target) {
    static const double w5[5] = {0.0448, 0.2856, 0.3001, 0.2363, 0.1333};
    const int min_dim = std::min(img.width, img.height);
    int scales = 1;
    while (scales < 5 && (min_dim >> scales) >= 16) ++scales;

    double wsum = 0.0;
    for (int j = 0; j < scales; ++j) wsum += w5[j];

    Plane x = luminance_plane(img), y = luminance_plane(target);
    double result = 1.0;
    for (int j = 0; j < scales; ++j) {
        const SsimStats stats = ssim_stats(x, y);
        const double factor =
            std::max(0.0, (j == scales - 1) ? stats.mean_ssim : stats.mean_cs);
        result *= std::pow(factor, w5[j] / wsum);
        if (j < scales - 1) {
            x = decimate2(x);
            y = decimate2(y);
        }
    }
    return result;
}

// Gradient-magnitude similarity deviation: 2x averaging + decimation, then
// Prewitt gradients and the population deviation of the similarity map.
double gmsd_value(const ImageBuffer& img, const ImageBuffer& target) {
    constexpr double c = 0.0026;
    const Plane g1 = gradient_magnitude(decimate2(luminance_plane(target)));
    const Plane g2 = gradient_magnitude(decimate2(luminance_plane(img)));
    double mean = 0.0;
    std::vector<double> gms(g1.v.size());
    for (std::size_t i = 0; i < gms.size(); ++i) {
        gms[i] = (2.0 * g1.v[i] * g2.v[i] + c) / (g1.v[i] * g1.v[i] + g2.v[i] * g2.v[i] + c);
        mean += gms[i];
    }
    mean /= static_cast<double>(gms.size());
    double var = 0.0;
    for (double v : gms) var += (v - mean) * (v - mean);
    return std::sqrt(var / static_cast<double>(gms.size()));
}

// Mean deviation similarity index with the published constants (0..255
// intensity scale). The target is the reference image.
double mdsi_value(const ImageBuffer& img, const ImageBuffer& target) {
    constexpr double C1 = 140.0, C2 = 55.0, C3 = 550.0, alpha = 0.6;

    const int f = std::max(1, static_cast<int>(std::lround(
                                  std::min(img.width, img.height) / 256.0)));
    const Plane L1 = average_pool(combine_channels(target, 0.2989, 0.5870, 0.1140, 255.0), f);
    const Plane L2 = average_pool(combine_channels(img, 0.2989, 0.5870, 0.1140, 255.0), f);
    const Plane H1 = average_pool(combine_channels(target, 0.30, 0.04, -0.35, 255.0), f);
    const Plane H2 = average_pool(combine_channels(img, 0.30, 0.04, -0.35, 255.0), f);
    const Plane M1 = average_pool(combine_channels(target, 0.34, -0.60, 0.17, 255.0), f);
    const Plane M2 = average_pool(combine_channels(img, 0.34, -0.60, 0.17, 255.0), f);

    Plane F(L1.w, L1.h);
    for (std::size_t i = 0; i < F.v.size(); ++i) F.v[i] = 0.5 * (L1.v[i] + L2.v[i]);

    const Plane g1 = gradient_magnitude(L1);
    const Plane g2 = gradient_magnitude(L2);
    const Plane gf = gradient_magnitude(F);

    // chroma similarity on the same valid grid as the gradients
    double q_acc = 0.0;
    std::vector<double> q(g1.v.size());
    for (int y = 0; y < g1.h; ++y) {
        for (int x = 0; x < g1.w; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * g1.w + x;
            const double a = g1.v[i], b = g2.v[i], cgrad = gf.v[i];
            const double gs12 = (2.0 * a * b + C1) / (a * a + b * b + C1);
            const double gs13 = (2.0 * a * cgrad + C2) / (a * a + cgrad * cgrad + C2);
            const double gs23 = (2.0 * b * cgrad + C2) / (b * b + cgrad * cgrad + C2);
            // grouped so identical inputs give exactly gs12
            const double gs_hvs = gs12 + (gs23 - gs13);

            const double h1 = H1.at(y + 1, x + 1), h2 = H2.at(y + 1, x + 1);
            const double m1 = M1.at(y + 1, x + 1), m2 = M2.at(y + 1, x + 1);
            const double cs = (2.0 * (h1 * h2 + m1 * m2) + C3) /
                              (h1 * h1 + h2 * h2 + m1 * m1 + m2 * m2 + C3);

            const double gcs = std::max(0.0, alpha * gs_hvs + (1.0 - alpha) * cs);
            q[i] = std::pow(gcs, 0.25);
            q_acc += q[i];
        }
    }
    const double q_mean = q_acc / static_cast<double>(q.size());
    double dev = 0.0;
    for (double v : q) dev += std::abs(v - q_mean);
    dev /= static_cast<double>(q.size());
    return std::pow(dev, 0.25);
}

double histogram_intersection(const ImageBuffer& img, const ImageBuffer& target) {
    constexpr int bins = 32;
    double total = 0.0;
    const std::size_t n = img.pixel_count();
    for (int c = 0; c < 3; ++c) {
        long h1[bins] = {0}, h2[bins] = {0};
        for (std::size_t p = 0; p < n; ++p) {
            ++h1[std::min(bins - 1, static_cast<int>(img.data[p * 3 + c] * bins))];
            ++h2[std::min(bins - 1, static_cast<int>(target.data[p * 3 + c] * bins))];
        }
        long overlap = 0;
        for (int b = 0; b < bins; ++b) overlap += std::min(h1[b], h2[b]);
        total += static_cast<double>(overlap) / static_cast<double>(n);
    }
    return total / 3.0;
}

// Normalized correlation of Sobel gradient vectors, SSIM-style stabilized so
// a flat patch matches only another flat patch.
double gradient_cosine(const ImageBuffer& img, const ImageBuffer& target) {
    constexpr double tau = 1e-4;
    Plane gx1, gy1, gx2, gy2;
    sobel_valid(luminance_plane(img), gx1, gy1);
    sobel_valid(luminance_plane(target), gx2, gy2);
    double acc = 0.0;
    for (std::size_t i = 0; i < gx1.v.size(); ++i) {
        const double dot = gx1.v[i] * gx2.v[i] + gy1.v[i] * gy2.v[i];
        const double n1 = gx1.v[i] * gx1.v[i] + gy1.v[i] * gy1.v[i];
        const double n2 = gx2.v[i] * gx2.v[i] + gy2.v[i] * gy2.v[i];
        acc += (2.0 * dot + tau) / (n1 + n2 + tau);
    }
    return acc / static_cast<double>(gx1.v.size());
}

double dispatch(const std::string& name, const ImageBuffer& image, const ImageBuffer& target) {
    if (name == "neg_mse") return -mse_rgb(image, target);
    if (name == "psnr") return psnr_luma(image, target);
    if (name == "ssim") return ssim_metric(image, target);
    if (name == "ms_ssim") return ms_ssim_metric(image, target);
    if (name == "neg_gmsd") return -gmsd_value(image, target);
    if (name == "neg_mdsi") return -mdsi_value(image, target);
    if (name == "hist_intersection") return histogram_intersection(image, target);
    if (name == "grad_cosine") return gradient_cosine(image, target);
    throw std::invalid_argument("unknown metric: " + name);
}

void check_evaluable(const ImageBuffer& image, const ImageBuffer& target) {
    validate_image_pair(image, target);
    if (std::min(image.width, image.height) < 16)
        throw std::invalid_argument("metrics require images of at least 16x16");
}

}  // namespace

MetricRegistry default_registry() {
    return registry_from_names({"neg_mse", "psnr", "ssim", "ms_ssim", "neg_gmsd", "neg_mdsi",
                                "hist_intersection", "grad_cosine"});
}

MetricRegistry registry_from_names(const std::vector<std::string>& names) {
    static const std::map<std::string, MetricKind> kinds = {
        {"neg_mse", MetricKind::Dissimilarity},  {"psnr", MetricKind::Similarity},
        {"ssim", MetricKind::Similarity},        {"ms_ssim", MetricKind::Similarity},
        {"neg_gmsd", MetricKind::Dissimilarity}, {"neg_mdsi", MetricKind::Dissimilarity},
        {"hist_intersection", MetricKind::Similarity},
        {"grad_cosine", MetricKind::Similarity},
    };
    if (names.empty()) throw ConfigError("objective registry must not be empty");
    MetricRegistry reg;
    reg.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        auto it = kinds.find(names[i]);
        if (it == kinds.end()) throw ConfigError("unknown metric in registry: " + names[i]);
        for (const auto& existing : reg)
            if (existing.name == names[i]) throw ConfigError("duplicate metric in registry: " + names[i]);
        reg.push_back({static_cast<ObjectiveId>(i), names[i], it->second});
    }
    return reg;
}

double evaluate_metric(const MetricSpec& spec, const ImageBuffer& image,
                       const ImageBuffer& target) {
    check_evaluable(image, target);
    return dispatch(spec.name, image, target);
}

FitnessVector evaluate_all(const ImageBuffer& image, const ImageBuffer& target,
                           const MetricRegistry& registry) {
    check_evaluable(image, target);
    FitnessVector v(registry.size());
    for (std::size_t i = 0; i < registry.size(); ++i) {
        v[i] = dispatch(registry[i].name, image, target);
        if (!std::isfinite(v[i]))
            throw std::runtime_error("metric '" + registry[i].name + "' produced a non-finite score");
    }
    return v;
}

const NormalizationEntry& NormalizationTable::lookup(const std::string& target_id,
                                                     const std::string& objective) const {
    auto t = entries.find(target_id);
    if (t == entries.end())
        throw ConfigError("normalization table has no target '" + target_id + "'");
    auto o = t->second.find(objective);
    if (o == t->second.end())
        throw ConfigError("normalization table missing objective '" + objective + "' for target '" +
                          target_id + "'");
    return o->second;
}

bool NormalizationTable::covers(const std::string& target_id, const MetricRegistry& registry) const {
    auto t = entries.find(target_id);
    if (t == entries.end()) return false;
    for (const auto& spec : registry)
        if (t->second.find(spec.name) == t->second.end()) return false;
    return true;
}

FitnessVector normalize(const FitnessVector& raw, const NormalizationTable& table,
                        const std::string& target_id, const MetricRegistry& registry) {
    if (raw.size() != registry.size())
        throw std::invalid_argument("normalize: vector length does not match registry");
    FitnessVector out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto& e = table.lookup(target_id, registry[i].name);
        out[i] = (raw[i] - e.floor) / (e.best - e.floor);
    }
    return out;
}

double mean_normalized(const FitnessVector& raw, const NormalizationTable& table,
                       const std::string& target_id, const MetricRegistry& registry) {
    const auto n = normalize(raw, table, target_id, registry);
    return std::accumulate(n.begin(), n.end(), 0.0) / static_cast<double>(n.size());
}

NormalizationTable calibrate_table(const std::vector<CalibrationRun>& runs,
                                   const std::string& target_id, const MetricRegistry& registry) {
    if (runs.empty()) throw ConfigError("calibration needs at least one baseline run");
    NormalizationTable table;
    for (std::size_t i = 0; i < registry.size(); ++i) {
        double best = 0.0;
        double floor_v = std::numeric_limits<double>::infinity();
        for (const auto& run : runs) {
            if (run.max.size() != registry.size() || run.min.size() != registry.size())
                throw std::invalid_argument("calibration run vector length mismatch");
            best += run.max[i];
            floor_v = std::min(floor_v, run.min[i]);
        }
        best /= static_cast<double>(runs.size());
        if (!(best > floor_v))
            throw DegenerateStatError("calibration degenerate for objective '" + registry[i].name +
                                      "' (best == floor)");
        table.entries[target_id][registry[i].name] = {best, floor_v};
    }
    for (const auto& run : runs) table.provenance.push_back(run.run_id);
    return table;
}

SyntheticObjectives SyntheticObjectives::unit_basis(int k) {
    SyntheticObjectives s;
    s.centers.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        s.centers[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(k), 0.0);
        s.centers[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
    }
    return s;
}

double SyntheticObjectives::evaluate(int index, std::span<const double> x) const {
    const auto& c = centers.at(static_cast<std::size_t>(index));
    if (x.size() != c.size())
        throw std::invalid_argument("synthetic objective: dimension mismatch");
    double acc = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        const double d = x[j] - c[j];
        acc += d * d;
    }
    return -acc;
}

FitnessVector SyntheticObjectives::evaluate_all(std::span<const double> x) const {
    FitnessVector v(centers.size());
    for (std::size_t i = 0; i < centers.size(); ++i) v[i] = evaluate(static_cast<int>(i), x);
    return v;
}

}  // namespace move
