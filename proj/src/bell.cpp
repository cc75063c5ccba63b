#include <tanperiod/bell.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace tanperiod
{

namespace
{

// Distributes the remaining weight over parts of size <= max_part, largest part first.
void enumerate(int remaining_weight, int remaining_count, int max_part, std::vector<int> &b,
               std::vector<std::vector<int>> &out)
{
    if (remaining_count == 0) {
        if (remaining_weight == 0) {
            out.push_back(b);
        }
        return;
    }
    if (max_part == 0) {
        return;
    }
    // Each of the remaining parts weighs at least 1 and at most max_part.
    if (remaining_weight < remaining_count || remaining_weight > remaining_count * max_part) {
        return;
    }
    for (int take = std::min(remaining_count, remaining_weight / max_part); take >= 0; --take) {
        b[static_cast<std::size_t>(max_part - 1)] = take;
        enumerate(remaining_weight - take * max_part, remaining_count - take, max_part - 1, b, out);
    }
    b[static_cast<std::size_t>(max_part - 1)] = 0;
}

std::vector<BellTerm> build_terms(int p, int q)
{
    const int len = p - q + 1;
    std::vector<int> b(static_cast<std::size_t>(len), 0);
    std::vector<std::vector<int>> tuples;
    enumerate(p, q, len, b, tuples);

    const ExactScalar pfact = ExactScalar::factorial(static_cast<unsigned>(p));
    const ExactScalar qfact = ExactScalar::factorial(static_cast<unsigned>(q));
    std::vector<BellTerm> terms;
    terms.reserve(tuples.size());
    for (auto &t : tuples) {
        ExactScalar bfact(1);
        ExactScalar jfact(1);
        for (std::size_t j = 0; j < t.size(); ++j) {
            bfact *= ExactScalar::factorial(static_cast<unsigned>(t[j]));
            jfact *= ExactScalar::factorial(static_cast<unsigned>(j + 1)).pow(t[j]);
        }
        terms.push_back(BellTerm{std::move(t), pfact / (bfact * jfact), qfact / bfact});
    }
    return terms;
}

} // namespace

const std::vector<BellTerm> &bell_terms(int p, int q)
{
    detail::check_bell_args(p, q, static_cast<std::size_t>(p - q + 1));
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<const std::vector<BellTerm>>> cache;
    std::lock_guard lock(mutex);
    auto &slot = cache[{p, q}];
    if (!slot) {
        slot = std::make_unique<const std::vector<BellTerm>>(build_terms(p, q));
    }
    return *slot;
}

} // namespace tanperiod
