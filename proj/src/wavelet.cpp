#include "impnoise/wavelet.hpp"

#include <cmath>
#include <stdexcept>

namespace impnoise {

namespace {

// Daubechies lowpass analysis filters, dbN = N vanishing moments, length 2N.
// Computed by spectral factorization at 80-digit precision and rounded to
// double; validated at construction by WaveletSpec::validate().
std::vector<double> daub_lowpass(int order) {
    switch (order) {
        case 1: return {
            0.707106781186547524401, 0.707106781186547524401,
        };
        case 2: return {
            0.482962913144534143375, 0.836516303737807905575,
            0.224143868042013381026, -0.129409522551260381174,
        };
        case 3: return {
            0.332670552950082615999, 0.806891509311092576494,
            0.459877502118491570095, -0.135011020010254588696,
            -0.0854412738820266616928, 0.0352262918857095366027,
        };
        case 4: return {
            0.230377813308896500863, 0.71484657055291564709,
            0.630880767929858907882, -0.0279837694168598542114,
            -0.18703481171909308408, 0.0308413818355607636272,
            0.0328830116668851997354, -0.0105974017850690321049,
        };
        case 5: return {
            0.160102397974192914481, 0.60382926979718967054,
            0.724308528437772927728, 0.138428145901320731505,
            -0.242294887066382031863, -0.0322448695846383746485,
            0.0775714938400457135231, -0.00624149021279827427419,
            -0.0125807519990819994685, 0.003335725285473771278,
        };
        case 6: return {
            0.111540743350109463621, 0.494623890398453085677,
            0.751133908021095350679, 0.315250351709197629086,
            -0.226264693965439820076, -0.129766867567261935562,
            0.0975016055873230491023, 0.0275228655303057286255,
            -0.0315820393174860295651, 0.000553842201161496139252,
            0.00477725751094551063964, -0.00107730108530847956485,
        };
        case 7: return {
            0.07785205408500917902, 0.396539319481917306539,
            0.729132090846235119917, 0.469782287405193122472,
            -0.143906003928564975405, -0.224036184993874982638,
            0.0713092192668302647509, 0.0806126091510830719129,
            -0.0380299369350144135796, -0.0165745416306668806541,
            0.012550998556099840613, 0.000429577972921366521132,
            -0.00180164070404749091527, 0.000353713799974520248446,
        };
        case 8: return {
            0.054415842243104009955, 0.312871590914299970659,
            0.675630736297289806808, 0.585354683654206712771,
            -0.0158291052563493056674, -0.284015542961546926516,
            0.000472484573913282770361, 0.128747426620478458857,
            -0.0173693010018075461696, -0.0440882539307947515068,
            0.0139810279173982816487, 0.00874609404740577671638,
            -0.00487035299345157431042, -0.000391740373376947046298,
            0.00067544940645056936637, -0.000117476784124769533731,
        };
        case 9: return {
            0.0380779473638783465887, 0.243834674612590353732,
            0.604823123690111111903, 0.657288078051300538078,
            0.133197385825007576191, -0.293273783279174908806,
            -0.0968407832229764605135, 0.148540749338106380135,
            0.0307256814793333792123, -0.0676328290613299736756,
            0.000250947114831451957587, 0.0223616621236790972054,
            -0.00472320475775139727793, -0.0042815036824634298345,
            0.00184764688305622647662, 0.000230385763523195967205,
            -0.000251963188942710136975, 0.0000393473203162715994807,
        };
        case 10: return {
            0.0266700579005555535866, 0.188176800077691489021,
            0.527201188931725586482, 0.688459039453603565742,
            0.281172343660577460749, -0.249846424327315379416,
            -0.195946274377377043504, 0.127369340335793260083,
            0.0930573646035723511604, -0.0713941471663970871453,
            -0.0294575368218758128583, 0.0332126740593410017398,
            0.00360655356695616965542, -0.0107331754833305750443,
            0.00139535174705290116579, 0.00199240529518505611716,
            -0.000685856694959711626561, -0.000116466855129285450951,
            0.0000935886703200695913341, -0.0000132642028945212448124,
        };
        default:
            throw std::invalid_argument("unsupported daubechies order");
    }
}

} // namespace

WaveletSpec WaveletSpec::daubechies(int order) {
    WaveletSpec spec;
    spec.order = order;
    spec.lowpass = daub_lowpass(order);
    const std::size_t len = spec.lowpass.size();
    spec.highpass.resize(len);
    for (std::size_t k = 0; k < len; ++k) {
        double v = spec.lowpass[len - 1 - k];
        spec.highpass[k] = (k % 2 == 0) ? v : -v;
    }
    spec.validate();
    return spec;
}

void WaveletSpec::validate() const {
    const std::size_t len = lowpass.size();
    if (len != static_cast<std::size_t>(2 * order) || highpass.size() != len)
        throw std::invalid_argument("inconsistent wavelet filter lengths");

    double sum = 0.0;
    for (double h : lowpass) sum += h;
    if (std::fabs(sum - std::sqrt(2.0)) > 1e-10)
        throw std::invalid_argument("lowpass does not sum to sqrt(2)");

    for (std::size_t m = 0; m < len / 2; ++m) {
        double dot = 0.0;
        for (std::size_t k = 0; k + 2 * m < len; ++k)
            dot += lowpass[k] * lowpass[k + 2 * m];
        const double expect = m == 0 ? 1.0 : 0.0;
        if (std::fabs(dot - expect) > 1e-10)
            throw std::invalid_argument("lowpass not orthonormal");
    }

    for (int p = 0; p < order; ++p) {
        double moment = 0.0, magnitude = 0.0;
        for (std::size_t k = 0; k < len; ++k) {
            const double term =
                std::pow(static_cast<double>(k), p) * highpass[k];
            moment += term;
            magnitude += std::fabs(term);
        }
        // cancellation in the k^p sums grows with the order; allow for the
        // rounding floor of the summed magnitudes on top of the base bound
        if (std::fabs(moment) > 1e-8 + 1e-13 * magnitude)
            throw std::invalid_argument("highpass moment not vanishing");
    }
}

void WaveletDecomposition::validate() const {
    if (levels < 1 || detail.size() != static_cast<std::size_t>(levels))
        throw std::invalid_argument("malformed decomposition");
    std::size_t expect = block_len;
    for (int j = 0; j < levels; ++j) {
        if (expect % 2 != 0 || detail[j].size() != expect / 2)
            throw std::invalid_argument("malformed decomposition");
        expect /= 2;
    }
    if (approx.size() != expect)
        throw std::invalid_argument("malformed decomposition");
}

WaveletDecomposition forward_dwt(std::span<const double> block,
                                 const WaveletSpec& spec,
                                 int levels) {
    const std::size_t N = block.size();
    if (levels < 1 || N == 0 || (N >> levels) == 0 ||
        N % (std::size_t{1} << levels) != 0)
        throw std::invalid_argument("depth exceeds block");

    WaveletDecomposition out;
    out.levels = levels;
    out.block_len = N;
    out.detail.resize(levels);

    const auto& h = spec.lowpass;
    const auto& g = spec.highpass;
    const std::size_t flen = h.size();

    std::vector<double> a(block.begin(), block.end());
    for (int j = 0; j < levels; ++j) {
        const std::size_t n = a.size();
        const std::size_t half = n / 2;
        std::vector<double> next(half, 0.0);
        std::vector<double>& d = out.detail[j];
        d.assign(half, 0.0);
        for (std::size_t k = 0; k < half; ++k) {
            double sa = 0.0, sd = 0.0;
            for (std::size_t m = 0; m < flen; ++m) {
                const double x = a[(2 * k + m) % n];
                sa += h[m] * x;
                sd += g[m] * x;
            }
            next[k] = sa;
            d[k] = sd;
        }
        a.swap(next);
    }
    out.approx = std::move(a);
    return out;
}

std::vector<double> inverse_dwt(const WaveletDecomposition& decomp,
                                const WaveletSpec& spec) {
    decomp.validate();

    const auto& h = spec.lowpass;
    const auto& g = spec.highpass;
    const std::size_t flen = h.size();

    std::vector<double> a = decomp.approx;
    for (int j = decomp.levels - 1; j >= 0; --j) {
        const std::vector<double>& d = decomp.detail[j];
        const std::size_t n = 2 * a.size();
        std::vector<double> x(n, 0.0);
        for (std::size_t k = 0; k < a.size(); ++k) {
            for (std::size_t m = 0; m < flen; ++m)
                x[(2 * k + m) % n] += h[m] * a[k] + g[m] * d[k];
        }
        a.swap(x);
    }
    return a;
}

double polynomial_suppression_check(const WaveletSpec& spec, int degree,
                                    std::size_t block_len) {
    if (degree < 0) throw std::invalid_argument("negative degree");

    const std::size_t N = block_len;
    std::vector<double> x(N);
    for (std::size_t i = 0; i < N; ++i) {
        const double t = (static_cast<double>(i) - static_cast<double>(N) / 2) /
                         (static_cast<double>(N) / 2);
        x[i] = std::pow(t, degree);
    }

    const auto& g = spec.highpass;
    const std::size_t flen = g.size();
    // only coefficients whose support stays inside the block (no wrap)
    double worst = 0.0;
    for (std::size_t k = 0; 2 * k + flen <= N; ++k) {
        double sd = 0.0;
        for (std::size_t m = 0; m < flen; ++m)
            sd += g[m] * x[2 * k + m];
        worst = std::max(worst, std::fabs(sd));
    }
    return worst; // signal peak is 1 by construction
}

} // namespace impnoise
