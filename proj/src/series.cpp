#include "leviflat/series.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "leviflat/csv.hpp"
#include "leviflat/errors.hpp"

namespace leviflat {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
const Complex kI(0.0, 1.0);
} // namespace

LogComplex CoefficientFamily::operator()(int n, Complex w) const
{
    if (n < 0)
        throw std::invalid_argument("coefficient index must be nonnegative");
    for (const Complex& s : singular_points) {
        if (w == s)
            throw singular_point_error(s, "coefficient family is singular at the requested point");
    }
    return rule(n, w);
}

LogComplex eval_a(int n, Complex w)
{
    if (n < 0)
        throw std::invalid_argument("eval_a requires n >= 0");
    if (n == 0)
        return LogComplex::from(w);
    if (w == kI)
        throw singular_point_error(kI, "a_n is singular at w = i");
    const Complex q = kI / (w - kI);
    const double nn = static_cast<double>(n) * static_cast<double>(n);
    return LogComplex(nn * std::log(std::abs(q)), nn * std::arg(q));
}

LogComplex eval_b(int n, Complex w)
{
    if (n < 1)
        throw std::invalid_argument("eval_b requires n >= 1");
    if (w == kI || w == -kI)
        throw singular_point_error(w, "b_n is singular at w = i and w = -i");
    const LogComplex a_plus = eval_a(n, w);
    const LogComplex a_minus = eval_a(n, -w);
    // (1/2)(A+B) - (i/2)(A-B) = ((1-i)/2) A + ((1+i)/2) B
    const LogComplex c_plus = LogComplex::from(Complex(0.5, -0.5));
    const LogComplex c_minus = LogComplex::from(Complex(0.5, 0.5));
    return c_plus * a_plus + c_minus * a_minus;
}

CoefficientFamily family_a()
{
    return CoefficientFamily{
        [](int n, Complex w) { return eval_a(n, w); },
        {kI},
    };
}

CoefficientFamily family_b()
{
    return CoefficientFamily{
        [](int n, Complex w) { return eval_b(n, w); },
        {kI, -kI},
    };
}

CoefficientFamily geometric_family(double ratio)
{
    if (!(ratio > 0.0) || !std::isfinite(ratio))
        throw std::invalid_argument("geometric family ratio must be positive and finite");
    const double log_ratio = std::log(ratio);
    return CoefficientFamily{
        [log_ratio](int n, Complex) { return LogComplex(n * log_ratio, 0.0); },
        {},
    };
}

double radius_estimate(const CoefficientFamily& family, Complex w, int N)
{
    if (N < 4)
        throw std::invalid_argument("radius_estimate requires N >= 4");
    const int lo = (N + 1) / 2;
    double max_root = -kInf; // log of max |a_n|^(1/n)
    for (int n = lo; n <= N; ++n) {
        const LogComplex a = family(n, w);
        if (a.is_zero())
            continue;
        max_root = std::max(max_root, a.logmag() / static_cast<double>(n));
    }
    if (max_root == -kInf)
        return kInf;
    return std::exp(-max_root);
}

void NormTable::validate() const
{
    int prev_k = 0;
    for (const Entry& e : entries) {
        if (e.k < 1 || e.k <= prev_k)
            throw std::invalid_argument("norm table indices must be strictly increasing and >= 1");
        if (!(e.norm_gamma > 0.0) || !std::isfinite(e.norm_gamma)
            || !(e.norm_w > 0.0) || !std::isfinite(e.norm_w))
            throw std::invalid_argument("norms must be positive and finite");
        prev_k = e.k;
    }
}

void NormTable::write_csv(const std::string& path) const
{
    validate();
    CsvWriter out(path);
    out.row({"k", "norm_gamma", "norm_W"});
    for (const Entry& e : entries)
        out.row({CsvWriter::cell(e.k), CsvWriter::cell(e.norm_gamma), CsvWriter::cell(e.norm_w)});
}

NormTable NormTable::read_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line != "k,norm_gamma,norm_W")
        throw std::runtime_error(path + ": expected header k,norm_gamma,norm_W");
    NormTable table;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream row(line);
        std::string k_s, g_s, w_s;
        if (!std::getline(row, k_s, ',') || !std::getline(row, g_s, ',') || !std::getline(row, w_s))
            throw std::runtime_error(path + ": malformed row '" + line + "'");
        table.entries.push_back({std::stoi(k_s), std::stod(g_s), std::stod(w_s)});
    }
    table.validate();
    return table;
}

GrowthFit growth_fit(const NormTable& table)
{
    if (table.entries.empty())
        throw std::invalid_argument("growth_fit requires a nonempty table");
    table.validate();

    double max_log_ratio = -kInf;
    double first = 0.0, last = 0.0;
    for (std::size_t i = 0; i < table.entries.size(); ++i) {
        const NormTable::Entry& e = table.entries[i];
        const double log_ratio =
            (std::log(e.norm_w) - std::log(e.norm_gamma)) / static_cast<double>(e.k);
        max_log_ratio = std::max(max_log_ratio, log_ratio);
        if (i == 0)
            first = log_ratio;
        last = log_ratio;
    }
    const GrowthTrend trend =
        (last - first > std::numbers::ln2) ? GrowthTrend::diverging : GrowthTrend::bounded;
    return GrowthFit{std::exp(max_log_ratio), trend};
}

Complex schwarz_reflect(const std::function<Complex(Complex)>& f, Complex z, double tol)
{
    if (!(z.imag() < 0.0))
        throw std::invalid_argument("schwarz_reflect requires Im z < 0");
    const double x = z.real();
    const Complex on_axis = f(Complex(x, 0.0));
    if (!(std::abs(on_axis.imag()) <= tol)) {
        throw reality_check_error(x,
            "function is not real on the axis at x = " + format_double(x)
            + " (Im f = " + format_double(on_axis.imag()) + ")");
    }
    return std::conj(f(std::conj(z)));
}

} // namespace leviflat
