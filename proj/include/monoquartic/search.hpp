#pragma once

/**
 * @file search.hpp
 * @brief Exhaustive box search, theorem verification, and the JKS/Dedekind
 *        cross-check harness.
 *
 * The (b, d) box is cut into contiguous b-strips. Workers evaluate strips
 * independently; the calling thread hands results to the sink strictly in
 * strip order, so the emitted sequence is ordered by (b, d) and does not
 * depend on the worker count.
 */

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "dedekind.hpp"
#include "fields.hpp"
#include "jks.hpp"
#include "monogenic.hpp"
#include "trinomial.hpp"

namespace monoquartic {

/// Inclusive bounds b_min <= b <= b_max, d_min <= d <= d_max.
struct SearchBox {
  Integer b_min, b_max, d_min, d_max;

  bool empty() const { return b_min > b_max || d_min > d_max; }
  Integer cells() const {
    return empty() ? Integer(0) : Integer((b_max - b_min + 1) * (d_max - d_min + 1));
  }
};

struct SearchFilters {
  bool c4_only = false;
  bool monogenic_only = false;
};

/// One emitted cell: a report, or the error that prevented one.
struct SearchItem {
  Trinomial trinomial;
  std::optional<MonogenicityReport> report;
  std::string error;

  bool ok() const { return report.has_value(); }
};

namespace detail {

inline std::optional<SearchItem> evaluate_cell(const Trinomial& t, const SearchFilters& filters,
                                               const ReportOptions& opts) {
  if (filters.c4_only) {
    // cheap necessary condition first; no factoring unless it passes
    if (!is_square(t.d * inner_discriminant(t))) return std::nullopt;
    if (!is_c4(t)) return std::nullopt;
  }
  try {
    MonogenicityReport r = is_monogenic(t, opts);
    if (filters.monogenic_only && !r.monogenic) return std::nullopt;
    return SearchItem{t, std::move(r), {}};
  } catch (const FactorizationIncomplete& e) {
    return SearchItem{t, std::nullopt, e.what()};
  } catch (const DegenerateTrinomial& e) {
    return SearchItem{t, std::nullopt, e.what()};
  }
}

struct Strip {
  Integer b_lo, b_hi;
};

inline std::vector<Strip> make_strips(const SearchBox& box, unsigned workers) {
  constexpr unsigned kStripsPerWorker = 16;
  const Integer nb = box.b_max - box.b_min + 1;
  const Integer target = Integer(std::max(1u, workers)) * kStripsPerWorker;
  const Integer width = std::max(Integer(1), Integer((nb + target - 1) / target));
  std::vector<Strip> strips;
  for (Integer lo = box.b_min; lo <= box.b_max; lo += width)
    strips.push_back({lo, std::min(Integer(lo + width - 1), box.b_max)});
  return strips;
}

inline std::vector<SearchItem> evaluate_strip(const Strip& s, const SearchBox& box,
                                              const SearchFilters& filters,
                                              const ReportOptions& opts) {
  std::vector<SearchItem> out;
  for (Integer b = s.b_lo; b <= s.b_hi; ++b)
    for (Integer d = box.d_min; d <= box.d_max; ++d)
      if (auto item = evaluate_cell(Trinomial{b, d}, filters, opts)) out.push_back(std::move(*item));
  return out;
}

}  // namespace detail

/// Evaluates every cell of the box and passes the surviving items to sink in
/// (b, d) order. Per-cell factorization failures and d = 0 cells are emitted
/// as error items; other exceptions propagate.
inline void search(const SearchBox& box, const SearchFilters& filters, unsigned workers,
                   const std::function<void(const SearchItem&)>& sink,
                   const ReportOptions& opts = {}) {
  if (box.empty()) throw std::invalid_argument("search: empty box");
  if (workers == 0) throw std::invalid_argument("search: worker count must be positive");
  const std::vector<detail::Strip> strips = detail::make_strips(box, workers);

  if (workers == 1) {
    for (const auto& s : strips)
      for (const auto& item : detail::evaluate_strip(s, box, filters, opts)) sink(item);
    return;
  }

  struct Slot {
    bool ready = false;
    std::vector<SearchItem> items;
    std::exception_ptr error;
  };
  std::vector<Slot> slots(strips.size());
  std::mutex mutex;
  std::condition_variable ready_cv;
  std::atomic<std::size_t> next{0};

  std::vector<std::jthread> pool;
  const unsigned n_threads = static_cast<unsigned>(std::min<std::size_t>(workers, strips.size()));
  for (unsigned w = 0; w < n_threads; ++w) {
    pool.emplace_back([&](std::stop_token stop) {
      for (std::size_t i; !stop.stop_requested() && (i = next++) < strips.size();) {
        Slot result;
        try {
          result.items = detail::evaluate_strip(strips[i], box, filters, opts);
        } catch (...) {
          result.error = std::current_exception();
        }
        std::lock_guard lock(mutex);
        slots[i] = std::move(result);
        slots[i].ready = true;
        ready_cv.notify_all();
      }
    });
  }

  for (std::size_t i = 0; i < strips.size(); ++i) {
    std::vector<SearchItem> items;
    {
      std::unique_lock lock(mutex);
      ready_cv.wait(lock, [&] { return slots[i].ready; });
      if (slots[i].error) {
        for (auto& t : pool) t.request_stop();
        std::rethrow_exception(slots[i].error);
      }
      items = std::move(slots[i].items);
    }
    for (const auto& item : items) sink(item);
  }
}

inline std::vector<SearchItem> search_collect(const SearchBox& box, const SearchFilters& filters,
                                              unsigned workers, const ReportOptions& opts = {}) {
  std::vector<SearchItem> out;
  search(box, filters, workers, [&out](const SearchItem& item) { out.push_back(item); }, opts);
  return out;
}

/// The monogenic C4 trinomials x^4 + b x^2 + d, up to field isomorphism.
inline const std::vector<Trinomial>& known_monogenic_c4() {
  static const std::vector<Trinomial> known = {{-5, 5}, {-4, 2}, {4, 2}};
  return known;
}

struct TheoremVerification {
  Integer b_bound, d_bound;
  std::vector<Trinomial> found;  ///< ascending (b, d)
  std::vector<MonogenicityReport> reports;
  FieldSeparation fields;
  std::vector<SearchItem> errors;
  bool pass = false;
};

/// Searches |b| <= b_bound, 1 <= d <= d_bound for monogenic C4 trinomials and
/// checks the result is exactly the known three, pairwise field-distinct.
inline TheoremVerification verify_theorem(const Integer& b_bound, const Integer& d_bound,
                                          unsigned workers = 1) {
  if (b_bound < 5 || d_bound < 5)
    throw std::invalid_argument("verify_theorem: bounds must be at least 5 to contain the "
                                "known trinomials (got b_bound=" + b_bound.str() +
                                ", d_bound=" + d_bound.str() + ")");
  TheoremVerification v;
  v.b_bound = b_bound;
  v.d_bound = d_bound;
  const SearchBox box{-b_bound, b_bound, 1, d_bound};
  search(box, {.c4_only = true, .monogenic_only = true}, workers, [&v](const SearchItem& item) {
    if (!item.ok()) {
      v.errors.push_back(item);
      return;
    }
    v.found.push_back(item.trinomial);
    v.reports.push_back(*item.report);
  });
  v.fields = distinct_fields(v.reports);
  v.pass = v.errors.empty() && v.found == known_monogenic_c4() &&
           v.fields.classes.size() == v.found.size() && v.fields.fully_separated();
  return v;
}

struct OracleDisagreement {
  Trinomial trinomial;
  Integer prime;
  PrimeVerdict jks;
  bool dedekind = false;
};

struct OracleCheckResult {
  std::size_t sampled = 0;     ///< trinomials drawn
  std::size_t agreements = 0;  ///< (trinomial, prime) pairs with equal verdicts
  std::vector<OracleDisagreement> disagreements;
};

namespace detail {

inline std::int64_t to_i64(const Integer& v, const char* what) {
  if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
    throw std::invalid_argument(std::string("oracle_check: ") + what + " exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace detail

/// Draws `samples` irreducible trinomials uniformly (with replacement) from
/// the box, skipping d = 0, and compares jks_prime_test with dedekind_test at
/// every prime q <= prime_cap dividing the discriminant.
inline OracleCheckResult oracle_check(std::size_t samples, std::uint64_t seed,
                                      const SearchBox& box, const Integer& prime_cap = 97) {
  OracleCheckResult result;
  if (samples == 0 || box.empty()) return result;
  std::mt19937_64 rng(seed);

  std::vector<Trinomial> population;
  std::function<std::optional<Trinomial>()> draw;
  constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 20;
  if (box.cells() <= kEnumerationLimit) {
    for (Integer b = box.b_min; b <= box.b_max; ++b)
      for (Integer d = box.d_min; d <= box.d_max; ++d)
        if (d != 0 && is_irreducible({b, d})) population.push_back({b, d});
    if (population.empty()) return result;
    draw = [&]() -> std::optional<Trinomial> {
      std::uniform_int_distribution<std::size_t> pick(0, population.size() - 1);
      return population[pick(rng)];
    };
  } else {
    // large boxes are dense in irreducibles; rejection sampling
    std::uniform_int_distribution<std::int64_t> bdist(detail::to_i64(box.b_min, "b_min"),
                                                      detail::to_i64(box.b_max, "b_max"));
    std::uniform_int_distribution<std::int64_t> ddist(detail::to_i64(box.d_min, "d_min"),
                                                      detail::to_i64(box.d_max, "d_max"));
    draw = [&, bdist, ddist]() mutable -> std::optional<Trinomial> {
      for (int attempt = 0; attempt < 1 << 16; ++attempt) {
        Trinomial t{bdist(rng), ddist(rng)};
        if (t.d != 0 && is_irreducible(t)) return t;
      }
      return std::nullopt;
    };
  }

  for (std::size_t s = 0; s < samples; ++s) {
    const auto t = draw();
    if (!t) break;
    ++result.sampled;
    for (const auto& pp : discriminant_factorization(*t).factors) {
      if (pp.prime > prime_cap) break;
      PrimeVerdict jks = jks_prime_test(*t, pp.prime);
      const bool ded = dedekind_test(*t, pp.prime);
      if (*jks.divides_index == ded)
        ++result.agreements;
      else
        result.disagreements.push_back({*t, pp.prime, std::move(jks), ded});
    }
  }
  return result;
}

}  // namespace monoquartic
