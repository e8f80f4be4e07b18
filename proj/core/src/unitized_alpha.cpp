#include "empathy/agreement.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "empathy/error.hpp"
#include "empathy/random.hpp"

namespace empathy::agreement {

namespace {

struct Segment {
  std::size_t begin;
  std::size_t end;
  bool unit;
};

// Units plus the gaps between them, covering [0, length).
std::vector<Segment> segments(std::span<const Span> units, std::size_t length) {
  std::vector<Segment> out;
  std::size_t pos = 0;
  for (const auto& u : units) {
    if (u.begin > pos) out.push_back({pos, u.begin, false});
    out.push_back({u.begin, u.end, true});
    pos = u.end;
  }
  if (pos < length) out.push_back({pos, length, false});
  return out;
}

double square(std::size_t x) { return static_cast<double>(x) * static_cast<double>(x); }

double distance(const Segment& a, const Segment& b) {
  if (a.unit && b.unit) {
    const auto db = a.begin > b.begin ? a.begin - b.begin : b.begin - a.begin;
    const auto de = a.end > b.end ? a.end - b.end : b.end - a.end;
    return square(db) + square(de);
  }
  if (a.unit && !b.unit && b.begin <= a.begin && a.end <= b.end) return square(a.end - a.begin);
  if (!a.unit && b.unit && a.begin <= b.begin && b.end <= a.end) return square(b.end - b.begin);
  return 0.0;
}

// Uniformly random non-overlapping placement of units with the given lengths:
// random unit order, free space split into len+1 gaps by stars and bars.
std::vector<Span> random_placement(std::vector<std::size_t> lengths, std::size_t continuum,
                                   Rng& rng) {
  shuffle(lengths, rng);
  const std::size_t k = lengths.size();
  const std::size_t occupied = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
  const std::size_t free = continuum - occupied;
  const std::size_t slots = free + k;

  // Floyd's algorithm: k distinct bar positions out of `slots`.
  std::set<std::size_t> bars;
  for (std::size_t j = slots - k; j < slots; ++j) {
    const auto t = static_cast<std::size_t>(uniform_below(rng, j + 1));
    if (!bars.insert(t).second) bars.insert(j);
  }

  std::vector<Span> placed;
  placed.reserve(k);
  std::size_t pos = 0;
  std::size_t previous_bar = 0;
  std::size_t unit = 0;
  for (std::size_t bar : bars) {
    const std::size_t gap = unit == 0 ? bar : bar - previous_bar - 1;
    pos += gap;
    placed.push_back({pos, pos + lengths[unit]});
    pos += lengths[unit];
    previous_bar = bar;
    ++unit;
  }
  return placed;
}

struct Prepared {
  std::size_t length;
  std::vector<std::vector<Span>> units;  // per annotator, sorted
};

double statistic(const std::vector<Prepared>& continua, double normaliser) {
  double sum = 0.0;
  for (const auto& c : continua) {
    for (std::size_t i = 0; i < c.units.size(); ++i)
      for (std::size_t j = i + 1; j < c.units.size(); ++j)
        sum += unitized_pair_disagreement(c.units[i], c.units[j], c.length);
  }
  return sum / normaliser;
}

}  // namespace

double unitized_pair_disagreement(std::span<const Span> a, std::span<const Span> b,
                                  std::size_t length) {
  const auto sa = segments(a, length);
  const auto sb = segments(b, length);
  double sum = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < sa.size() && j < sb.size()) {
    const auto& x = sa[i];
    const auto& y = sb[j];
    if (std::max(x.begin, y.begin) < std::min(x.end, y.end)) sum += distance(x, y);
    if (x.end < y.end) {
      ++i;
    } else if (y.end < x.end) {
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  // delta is symmetric, so both orderings of the pair contribute equally
  return 2.0 * sum;
}

UnitizedAlphaResult unitized_alpha(std::span<const Continuum> continua,
                                   const UnitizedAlphaOptions& options) {
  std::vector<Prepared> prepared;
  double normaliser = 0.0;
  bool any_unit = false;
  for (const auto& c : continua) {
    if (c.units.size() < 2) continue;
    Prepared p{c.length, {}};
    for (const auto& [annotator, units] : c.units) {
      auto sorted = units;
      std::sort(sorted.begin(), sorted.end(),
                [](const Span& x, const Span& y) { return x.begin < y.begin; });
      for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted[k].begin >= sorted[k].end || sorted[k].end > c.length)
          throw ValidationError("unit outside continuum");
        if (k > 0 && sorted[k].begin < sorted[k - 1].end)
          throw ValidationError("overlapping units for annotator " + annotator);
      }
      any_unit = any_unit || !sorted.empty();
      p.units.push_back(std::move(sorted));
    }
    const auto m = static_cast<double>(p.units.size());
    normaliser += m * (m - 1.0) * static_cast<double>(c.length);
    prepared.push_back(std::move(p));
  }
  if (prepared.empty()) throw UndefinedMetricError("unitized alpha: fewer than two annotators");
  if (!any_unit) throw UndefinedMetricError("category absent");
  if (normaliser <= 0.0) throw UndefinedMetricError("unitized alpha: empty continua");
  if (options.rounds == 0) throw std::invalid_argument("unitized alpha: rounds must be positive");

  UnitizedAlphaResult result;
  result.observed = statistic(prepared, normaliser);

  Rng rng(options.seed);
  std::vector<Prepared> shuffled = prepared;
  double expected_sum = 0.0;
  for (std::size_t round = 0; round < options.rounds; ++round) {
    for (std::size_t c = 0; c < prepared.size(); ++c) {
      for (std::size_t a = 0; a < prepared[c].units.size(); ++a) {
        const auto& units = prepared[c].units[a];
        std::vector<std::size_t> lengths;
        lengths.reserve(units.size());
        for (const auto& u : units) lengths.push_back(u.length());
        shuffled[c].units[a] = random_placement(std::move(lengths), prepared[c].length, rng);
      }
    }
    expected_sum += statistic(shuffled, normaliser);
  }
  result.expected = expected_sum / static_cast<double>(options.rounds);

  if (result.expected <= 0.0) {
    if (result.observed <= 0.0) {
      result.alpha = 1.0;
      return result;
    }
    throw UndefinedMetricError("unitized alpha: expected disagreement is 0");
  }
  result.alpha = 1.0 - result.observed / result.expected;
  return result;
}

}  // namespace empathy::agreement
