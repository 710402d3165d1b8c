#include "amdkit/spectrum.hpp"

#include <algorithm>
#include <ostream>
#include <thread>

namespace amdkit {

namespace {

// Shift tables make the inner loop pure array lookups; skipped when a
// component is too large to tabulate quadratically.
constexpr std::uint64_t kShiftTableLimit = std::uint64_t{1} << 22;

struct ShiftTables {
  std::vector<std::uint32_t> a1, a2, bsub;  // empty when not tabulated
  bool have1 = false, have2 = false, haveb = false;

  static ShiftTables build(const Func& f) {
    ShiftTables t;
    std::uint64_t n1 = f.a1()->order(), n2 = f.a2()->order(), nb = f.b()->order();
    if (n1 * n1 <= kShiftTableLimit) {
      t.a1.resize(std::size_t(n1 * n1));
      for (Idx d = 0; d < n1; ++d)
        for (Idx s = 0; s < n1; ++s) t.a1[std::size_t(d * n1 + s)] = std::uint32_t(f.a1()->add(s, d));
      t.have1 = true;
    }
    if (n2 * n2 <= kShiftTableLimit) {
      t.a2.resize(std::size_t(n2 * n2));
      for (Idx d = 0; d < n2; ++d)
        for (Idx s = 0; s < n2; ++s) t.a2[std::size_t(d * n2 + s)] = std::uint32_t(f.a2()->add(s, d));
      t.have2 = true;
    }
    if (nb * nb <= kShiftTableLimit) {
      t.bsub.resize(std::size_t(nb * nb));
      for (Idx u = 0; u < nb; ++u)
        for (Idx v = 0; v < nb; ++v) t.bsub[std::size_t(u * nb + v)] = std::uint32_t(f.b()->sub(u, v));
      t.haveb = true;
    }
    return t;
  }
};

// Count rows for offsets [lo, hi) into sink(deltaA, b, count-vector).
template <typename Sink>
void scan_offsets(const Func& f, const ShiftTables& t, bool restricted, Idx lo, Idx hi,
                  Sink&& sink) {
  const std::uint64_t n1 = f.a1()->order(), n2 = f.a2()->order(), nb = f.b()->order();
  std::vector<std::uint64_t> row(static_cast<std::size_t>(nb));
  std::vector<std::uint32_t> shifted1(static_cast<std::size_t>(n1)), shifted2(static_cast<std::size_t>(n2));
  const std::uint32_t* tab = f.table().data();
  for (Idx delta = lo; delta < hi; ++delta) {
    Idx d1 = delta % n1, d2 = delta / n1;
    if (restricted && d1 == 0) continue;
    if (t.have1) {
      const std::uint32_t* src = t.a1.data() + std::size_t(d1 * n1);
      std::copy(src, src + n1, shifted1.begin());
    } else {
      for (Idx s = 0; s < n1; ++s) shifted1[std::size_t(s)] = std::uint32_t(f.a1()->add(s, d1));
    }
    if (t.have2) {
      const std::uint32_t* src = t.a2.data() + std::size_t(d2 * n2);
      std::copy(src, src + n2, shifted2.begin());
    } else {
      for (Idx s = 0; s < n2; ++s) shifted2[std::size_t(s)] = std::uint32_t(f.a2()->add(s, d2));
    }
    std::fill(row.begin(), row.end(), 0);
    for (Idx s1 = 0; s1 < n1; ++s1) {
      const std::uint32_t* frow = tab + std::size_t(s1 * n2);
      const std::uint32_t* grow = tab + std::size_t(std::uint64_t(shifted1[std::size_t(s1)]) * n2);
      for (Idx s2 = 0; s2 < n2; ++s2) {
        std::uint32_t fv = frow[std::size_t(s2)];
        std::uint32_t gv = grow[std::size_t(shifted2[std::size_t(s2)])];
        Idx diff = t.haveb ? t.bsub[std::size_t(std::uint64_t(gv) * nb + fv)]
                           : f.b()->sub(gv, fv);
        ++row[std::size_t(diff)];
      }
    }
    sink(delta, row);
  }
}

std::vector<std::pair<Idx, Idx>> partition(Idx total, unsigned workers) {
  workers = std::max(1u, workers);
  std::vector<std::pair<Idx, Idx>> chunks;
  Idx step = (total + workers - 1) / workers;
  for (Idx lo = 0; lo < total; lo += step) chunks.emplace_back(lo, std::min(lo + step, total));
  return chunks;
}

}  // namespace

void DifferentialSpectrum::write_csv(std::ostream& os) const {
  os << "deltaIndex,bIndex,count\n";
  for (Idx d = 0; d < domain_; ++d)
    for (Idx b = 0; b < codomain_; ++b)
      os << d << "," << b << "," << count(d, b) << "\n";
}

DifferentialSpectrum differential_spectrum(const Func& f, bool restricted, unsigned workers,
                                           std::uint64_t max_cells) {
  const std::uint64_t na = f.domain_order(), nb = f.b()->order();
  require(na <= max_cells / std::max<std::uint64_t>(nb, 1), Errc::SizeCapExceeded,
          "spectrum of " + std::to_string(na * nb) + " cells exceeds the size cap");
  require(na * nb <= kMaterializeCells, Errc::SizeCapExceeded,
          "spectrum too large to materialize; use the streaming maximum");

  DifferentialSpectrum spec(na, nb, restricted);
  ShiftTables tables = ShiftTables::build(f);
  auto chunks = partition(na, workers);
  auto work = [&](std::size_t ci) {
    scan_offsets(f, tables, restricted, chunks[ci].first, chunks[ci].second,
                 [&](Idx delta, const std::vector<std::uint64_t>& row) {
                   std::copy(row.begin(), row.end(),
                             spec.raw().begin() + std::ptrdiff_t(delta * nb));
                 });
  };
  if (chunks.size() <= 1) {
    if (!chunks.empty()) work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t ci = 0; ci < chunks.size(); ++ci) pool.emplace_back(work, ci);
    for (auto& th : pool) th.join();
  }
  return spec;
}

SpectrumMax spectrum_max(const Func& f, bool restricted, unsigned workers) {
  const std::uint64_t na = f.domain_order(), nb = f.b()->order();
  ShiftTables tables = ShiftTables::build(f);
  auto chunks = partition(na, workers);
  std::vector<SpectrumMax> partial(chunks.size());
  auto work = [&](std::size_t ci) {
    SpectrumMax best;
    bool first = true;
    scan_offsets(f, tables, restricted, chunks[ci].first, chunks[ci].second,
                 [&](Idx delta, const std::vector<std::uint64_t>& row) {
                   if (!restricted && delta == 0) return;  // offset 0 never counts
                   for (Idx b = 0; b < nb; ++b) {
                     if (first || row[std::size_t(b)] > best.count) {
                       best = {row[std::size_t(b)], delta, b};
                       first = false;
                     }
                   }
                 });
    partial[ci] = best;
  };
  if (chunks.size() <= 1) {
    if (!chunks.empty()) work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t ci = 0; ci < chunks.size(); ++ci) pool.emplace_back(work, ci);
    for (auto& th : pool) th.join();
  }
  // chunks are offset-ordered, so keeping strict improvements yields the
  // smallest (delta, b) argmax regardless of the worker count
  SpectrumMax best;
  bool first = true;
  for (const auto& cand : partial) {
    if (first || cand.count > best.count) {
      best = cand;
      first = false;
    }
  }
  return best;
}

Rational nonlinearity_of(const Func& f, unsigned workers) {
  SpectrumMax m = spectrum_max(f, /*restricted=*/false, workers);
  return Rational(m.count, f.domain_order());
}

Rational partial_nonlinearity_of(const Func& f, unsigned workers) {
  SpectrumMax m = spectrum_max(f, /*restricted=*/true, workers);
  return Rational(m.count, f.domain_order());
}

bool is_balanced(std::span<const std::uint32_t> table, std::uint64_t codomain_order) {
  if (codomain_order == 0 || table.size() % codomain_order != 0) return false;
  std::vector<std::uint64_t> freq(std::size_t(codomain_order), 0);
  for (auto v : table) {
    if (v >= codomain_order) return false;
    ++freq[v];
  }
  std::uint64_t want = table.size() / codomain_order;
  return std::all_of(freq.begin(), freq.end(), [&](std::uint64_t c) { return c == want; });
}

bool is_perfect_nonlinear(const Func& f, unsigned workers) {
  return nonlinearity_of(f, workers) == Rational(1, f.b()->order());
}

bool all_derivatives_balanced(const Func& f) {
  const std::uint64_t na = f.domain_order(), nb = f.b()->order();
  const std::uint64_t want = na / nb;
  if (na % nb != 0) return false;
  ShiftTables tables = ShiftTables::build(f);
  bool ok = true;
  scan_offsets(f, tables, /*restricted=*/false, 1, na,
               [&](Idx, const std::vector<std::uint64_t>& row) {
                 for (auto c : row) ok = ok && c == want;
               });
  return ok;
}

}  // namespace amdkit
