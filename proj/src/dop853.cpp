#include <tanperiod/dop853.hpp>

#include <algorithm>
#include <cmath>
#include <utility>

namespace tanperiod::ode
{

namespace
{

// Dormand-Prince 8(5,3) tableau (Hairer, Norsett & Wanner).
constexpr long double a21 = 5.26001519587677318785587544488e-2L;
constexpr long double a31 = 1.97250569845378994544595329183e-2L;
constexpr long double a32 = 5.91751709536136983633785987549e-2L;
constexpr long double a41 = 2.95875854768068491816892993775e-2L;
constexpr long double a43 = 8.87627564304205475450678981324e-2L;
constexpr long double a51 = 2.41365134159266685502369798665e-1L;
constexpr long double a53 = -8.84549479328286085344864962717e-1L;
constexpr long double a54 = 9.24834003261792003115737966543e-1L;
constexpr long double a61 = 3.7037037037037037037037037037e-2L;
constexpr long double a64 = 1.70828608729473871279604482173e-1L;
constexpr long double a65 = 1.25467687566822425016691814123e-1L;
constexpr long double a71 = 3.7109375e-2L;
constexpr long double a74 = 1.70252211019544039314978060272e-1L;
constexpr long double a75 = 6.02165389804559606850219397283e-2L;
constexpr long double a76 = -1.7578125e-2L;
constexpr long double a81 = 3.70920001185047927108779319836e-2L;
constexpr long double a84 = 1.70383925712239993810214054705e-1L;
constexpr long double a85 = 1.07262030446373284651809199168e-1L;
constexpr long double a86 = -1.53194377486244017527936158236e-2L;
constexpr long double a87 = 8.27378916381402288758473766002e-3L;
constexpr long double a91 = 6.24110958716075717114429577812e-1L;
constexpr long double a94 = -3.36089262944694129406857109825e0L;
constexpr long double a95 = -8.68219346841726006818189891453e-1L;
constexpr long double a96 = 2.75920996994467083049415600797e1L;
constexpr long double a97 = 2.01540675504778934086186788979e1L;
constexpr long double a98 = -4.34898841810699588477366255144e1L;
constexpr long double a101 = 4.77662536438264365890433908527e-1L;
constexpr long double a104 = -2.48811461997166764192642586468e0L;
constexpr long double a105 = -5.90290826836842996371446475743e-1L;
constexpr long double a106 = 2.12300514481811942347288949897e1L;
constexpr long double a107 = 1.52792336328824235832596922938e1L;
constexpr long double a108 = -3.32882109689848629194453265587e1L;
constexpr long double a109 = -2.03312017085086261358222928593e-2L;
constexpr long double a111 = -9.3714243008598732571704021658e-1L;
constexpr long double a114 = 5.18637242884406370830023853209e0L;
constexpr long double a115 = 1.09143734899672957818500254654e0L;
constexpr long double a116 = -8.14978701074692612513997267357e0L;
constexpr long double a117 = -1.85200656599969598641566180701e1L;
constexpr long double a118 = 2.27394870993505042818970056734e1L;
constexpr long double a119 = 2.49360555267965238987089396762e0L;
constexpr long double a1110 = -3.0467644718982195003823669022e0L;
constexpr long double a121 = 2.27331014751653820792359768449e0L;
constexpr long double a124 = -1.05344954667372501984066689879e1L;
constexpr long double a125 = -2.00087205822486249909675718444e0L;
constexpr long double a126 = -1.79589318631187989172765950534e1L;
constexpr long double a127 = 2.79488845294199600508499808837e1L;
constexpr long double a128 = -2.85899827713502369474065508674e0L;
constexpr long double a129 = -8.87285693353062954433549289258e0L;
constexpr long double a1210 = 1.23605671757943030647266201528e1L;
constexpr long double a1211 = 6.43392746015763530355970484046e-1L;

constexpr long double b1 = 5.42937341165687622380535766363e-2L;
constexpr long double b6 = 4.45031289275240888144113950566e0L;
constexpr long double b7 = 1.89151789931450038304281599044e0L;
constexpr long double b8 = -5.8012039600105847814672114227e0L;
constexpr long double b9 = 3.1116436695781989440891606237e-1L;
constexpr long double b10 = -1.52160949662516078556178806805e-1L;
constexpr long double b11 = 2.01365400804030348374776537501e-1L;
constexpr long double b12 = 4.47106157277725905176885569043e-2L;

constexpr long double bhh1 = 0.244094488188976377952755905512e+00L;
constexpr long double bhh2 = 0.733846688281611857341361741547e+00L;
constexpr long double bhh3 = 0.220588235294117647058823529412e-01L;

constexpr long double er1 = 0.1312004499419488073250102996e-01L;
constexpr long double er6 = -0.1225156446376204440720569753e+01L;
constexpr long double er7 = -0.4957589496572501915214079952e+00L;
constexpr long double er8 = 0.1664377182454986536961530415e+01L;
constexpr long double er9 = -0.3503288487499736816886487290e+00L;
constexpr long double er10 = 0.3341791187130174790297318841e+00L;
constexpr long double er11 = 0.8192320648511571246570742613e-01L;
constexpr long double er12 = -0.2235530786388629525884427845e-01L;

} // namespace

Dop853::Dop853(Rhs rhs, long double abs_tol, long double rel_tol, State scale)
    : m_rhs(std::move(rhs)), m_abs_tol(abs_tol), m_rel_tol(rel_tol), m_scale(scale)
{
}

StepResult Dop853::step(const State &y, const State &k1, long double h) const
{
    auto combo = [&](std::initializer_list<std::pair<long double, const State *>> terms) {
        State out = y;
        for (std::size_t i = 0; i < out.size(); ++i) {
            long double acc = 0.0L;
            for (const auto &[c, k] : terms) {
                acc += c * (*k)[i];
            }
            out[i] += h * acc;
        }
        return out;
    };

    const State k2 = m_rhs(combo({{a21, &k1}}));
    const State k3 = m_rhs(combo({{a31, &k1}, {a32, &k2}}));
    const State k4 = m_rhs(combo({{a41, &k1}, {a43, &k3}}));
    const State k5 = m_rhs(combo({{a51, &k1}, {a53, &k3}, {a54, &k4}}));
    const State k6 = m_rhs(combo({{a61, &k1}, {a64, &k4}, {a65, &k5}}));
    const State k7 = m_rhs(combo({{a71, &k1}, {a74, &k4}, {a75, &k5}, {a76, &k6}}));
    const State k8 = m_rhs(combo({{a81, &k1}, {a84, &k4}, {a85, &k5}, {a86, &k6}, {a87, &k7}}));
    const State k9 = m_rhs(combo({{a91, &k1}, {a94, &k4}, {a95, &k5}, {a96, &k6}, {a97, &k7}, {a98, &k8}}));
    const State k10
        = m_rhs(combo({{a101, &k1}, {a104, &k4}, {a105, &k5}, {a106, &k6}, {a107, &k7}, {a108, &k8}, {a109, &k9}}));
    const State k11 = m_rhs(combo({{a111, &k1},
                                   {a114, &k4},
                                   {a115, &k5},
                                   {a116, &k6},
                                   {a117, &k7},
                                   {a118, &k8},
                                   {a119, &k9},
                                   {a1110, &k10}}));
    const State k12 = m_rhs(combo({{a121, &k1},
                                   {a124, &k4},
                                   {a125, &k5},
                                   {a126, &k6},
                                   {a127, &k7},
                                   {a128, &k8},
                                   {a129, &k9},
                                   {a1210, &k10},
                                   {a1211, &k11}}));

    StepResult r;
    long double err5 = 0.0L;
    long double err3 = 0.0L;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const long double incr = b1 * k1[i] + b6 * k6[i] + b7 * k7[i] + b8 * k8[i] + b9 * k9[i] + b10 * k10[i]
                                 + b11 * k11[i] + b12 * k12[i];
        r.y[i] = y[i] + h * incr;
        const long double sc
            = m_abs_tol * m_scale[i] + m_rel_tol * std::max(std::fabs(y[i]), std::fabs(r.y[i]));
        const long double e3 = incr - bhh1 * k1[i] - bhh2 * k9[i] - bhh3 * k12[i];
        const long double e5 = er1 * k1[i] + er6 * k6[i] + er7 * k7[i] + er8 * k8[i] + er9 * k9[i]
                               + er10 * k10[i] + er11 * k11[i] + er12 * k12[i];
        err3 += (e3 / sc) * (e3 / sc);
        err5 += (e5 / sc) * (e5 / sc);
    }
    long double deno = err5 + 0.01L * err3;
    if (deno <= 0.0L) {
        deno = 1.0L;
    }
    r.error = std::fabs(h) * err5 * std::sqrt(1.0L / (static_cast<long double>(y.size()) * deno));
    return r;
}

long double Dop853::step_factor(long double error)
{
    if (error == 0.0L) {
        return 6.0L;
    }
    return std::clamp(0.9L * std::pow(error, -0.125L), 1.0L / 3.0L, 6.0L);
}

} // namespace tanperiod::ode
