#include "amdkit/amd.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>

namespace amdkit {

AmdCode build_code(Func f) {
  std::uint64_t m = f.a1()->order();
  std::uint64_t t = f.a2()->order();
  std::uint64_t nb = f.b()->order();
  return AmdCode{std::move(f), m, t, nb, m * t * nb};
}

Idx SeededSampler::operator()(Idx bound) {
  require(bound >= 1, Errc::DegenerateParameters, "empty sampling range");
  if (bound == 1) return 0;
  int width = std::bit_width(bound - 1);
  std::uint64_t maskv = (width >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
  while (true) {
    Idx v = eng_() & maskv;
    if (v < bound) return v;
  }
}

Codeword encode(const AmdCode& code, Idx s1, Sampler& draw) {
  require(s1 < code.m, Errc::BadSource, "source index out of range");
  Idx x = draw(code.t);
  require(x < code.t, Errc::IndexOutOfRange, "sampler exceeded its bound");
  return Codeword{s1, x, code.f.eval(s1, x)};
}

std::optional<Idx> decode(const AmdCode& code, const Codeword& w) {
  require(w.s1 < code.m && w.s2 < code.t && w.tag < code.nb, Errc::IndexOutOfRange,
          "codeword component out of range");
  if (code.f.eval(w.s1, w.s2) == w.tag) return w.s1;
  return std::nullopt;
}

Codeword mask(const AmdCode& code, const Codeword& w, const Offset& delta) {
  return Codeword{code.f.a1()->add(w.s1, delta.a1), code.f.a2()->add(w.s2, delta.a2),
                  code.f.b()->add(w.tag, delta.b)};
}

Codeword unmask(const AmdCode& code, const Codeword& w, const Offset& delta) {
  return Codeword{code.f.a1()->sub(w.s1, delta.a1), code.f.a2()->sub(w.s2, delta.a2),
                  code.f.b()->sub(w.tag, delta.b)};
}

namespace {

// #{x in A2 : the codeword of (s1, x) shifted by delta decodes validly}
std::uint64_t valid_shift_count(const AmdCode& code, Idx s1, const Offset& delta) {
  std::uint64_t hits = 0;
  for (Idx x = 0; x < code.t; ++x) {
    Codeword g = mask(code, Codeword{s1, x, code.f.eval(s1, x)}, delta);
    if (decode(code, g).has_value()) ++hits;
  }
  return hits;
}

}  // namespace

Rational success_given(const AmdCode& code, const Offset& delta, const Model& model) {
  require(!delta.is_zero(), Errc::ZeroOffset, "tamper offset must be nonzero");
  require(delta.a1 < code.m && delta.a2 < code.t && delta.b < code.nb, Errc::IndexOutOfRange,
          "offset component out of range");
  switch (model.kind) {
    case AttackModel::Weak: {
      // success decodes to a different source, so offsets fixing the source
      // component never succeed
      if (delta.a1 == 0) return Rational(0, 1);
      std::uint64_t hits = 0;
      for (Idx s = 0; s < code.m; ++s) hits += valid_shift_count(code, s, delta);
      return Rational(hits, code.m * code.t);
    }
    case AttackModel::Strong: {
      require(model.source < code.m, Errc::BadSource, "source index out of range");
      if (delta.a1 == 0) return Rational(0, 1);
      return Rational(valid_shift_count(code, model.source, delta), code.t);
    }
    case AttackModel::Stronger: {
      // any valid decode counts, including back onto the original source
      std::uint64_t hits = 0;
      for (Idx s = 0; s < code.m; ++s) hits += valid_shift_count(code, s, delta);
      return Rational(hits, code.m * code.t);
    }
  }
  fail(Errc::BadModel, "unknown attack model");
}

namespace {

struct OffsetScan {
  std::uint64_t weak_hits = 0, stronger_hits = 0;
  std::vector<std::uint64_t> per_source;  // valid shifts per source
};

struct WorkerMax {
  bool any = false;
  std::uint64_t weak_best = 0;
  Offset weak_arg;
  std::uint64_t stronger_best = 0;
  Offset stronger_arg;
  std::vector<std::uint64_t> strong_best;  // per source
};

}  // namespace

SuccessProfile evaluate(const AmdCode& code, const ModelSet& models, unsigned workers,
                        std::uint64_t max_cells) {
  require(code.n <= max_cells, Errc::SizeCapExceeded,
          "offset space of " + std::to_string(code.n) + " exceeds the size cap");

  const std::uint64_t m = code.m, t = code.t, nb = code.nb;
  const Group& g1 = *code.f.a1();
  const Group& g2 = *code.f.a2();
  const Group& gb = *code.f.b();

  // Offsets scan in (a1, a2, b) lexicographic order with b outermost kept in
  // the index math so the argmax tie-break is (deltaA, b).
  workers = std::max(1u, workers);
  const std::uint64_t delta_a_total = m * t;
  std::uint64_t step = (delta_a_total + workers - 1) / workers;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> chunks;
  for (std::uint64_t lo = 0; lo < delta_a_total; lo += step)
    chunks.emplace_back(lo, std::min(lo + step, delta_a_total));

  std::vector<WorkerMax> partial(chunks.size());
  auto work = [&](std::size_t ci) {
    WorkerMax out;
    out.strong_best.assign(std::size_t(m), 0);
    std::vector<std::uint64_t> hits(static_cast<std::size_t>(m));
    for (std::uint64_t da = chunks[ci].first; da < chunks[ci].second; ++da) {
      Idx a1 = da % m, a2 = da / m;
      for (Idx b = 0; b < nb; ++b) {
        if (da == 0 && b == 0) continue;  // the zero offset is not a tamper
        std::fill(hits.begin(), hits.end(), 0);
        for (Idx s = 0; s < m; ++s) {
          Idx srow = g1.add(s, a1);
          for (Idx x = 0; x < t; ++x) {
            Idx xs = g2.add(x, a2);
            Idx tag = gb.add(code.f.eval(s, x), b);
            if (code.f.eval(srow, xs) == tag) ++hits[std::size_t(s)];
          }
        }
        std::uint64_t total = 0;
        for (auto h : hits) total += h;
        if (models.stronger && (!out.any || total > out.stronger_best)) {
          out.stronger_best = total;
          out.stronger_arg = {a1, a2, b};
        }
        if (a1 != 0) {
          if (models.weak && (!out.any || total > out.weak_best)) {
            out.weak_best = total;
            out.weak_arg = {a1, a2, b};
          }
          if (models.strong)
            for (Idx s = 0; s < m; ++s)
              out.strong_best[std::size_t(s)] =
                  std::max(out.strong_best[std::size_t(s)], hits[std::size_t(s)]);
        }
        out.any = true;
      }
    }
    partial[ci] = std::move(out);
  };
  if (chunks.size() <= 1) {
    if (!chunks.empty()) work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t ci = 0; ci < chunks.size(); ++ci) pool.emplace_back(work, ci);
    for (auto& th : pool) th.join();
  }

  WorkerMax merged;
  merged.strong_best.assign(std::size_t(m), 0);
  for (const auto& cand : partial) {
    if (!cand.any) continue;
    if (!merged.any || cand.weak_best > merged.weak_best) {
      merged.weak_best = cand.weak_best;
      merged.weak_arg = cand.weak_arg;
    }
    if (!merged.any || cand.stronger_best > merged.stronger_best) {
      merged.stronger_best = cand.stronger_best;
      merged.stronger_arg = cand.stronger_arg;
    }
    for (Idx s = 0; s < m; ++s)
      merged.strong_best[std::size_t(s)] =
          std::max(merged.strong_best[std::size_t(s)], cand.strong_best[std::size_t(s)]);
    merged.any = true;
  }

  SuccessProfile profile;
  if (models.weak) {
    profile.weak_computed = true;
    profile.weak_rho = Rational(merged.weak_best, m * t);
    profile.weak_argmax = merged.weak_arg;
  }
  if (models.strong) {
    profile.strong_computed = true;
    profile.strong_rho_per_source.reserve(std::size_t(m));
    std::uint64_t best = 0;
    for (Idx s = 0; s < m; ++s) {
      profile.strong_rho_per_source.emplace_back(merged.strong_best[std::size_t(s)], t);
      best = std::max(best, merged.strong_best[std::size_t(s)]);
    }
    profile.strong_rho = Rational(best, t);
  }
  if (models.stronger) {
    profile.stronger_computed = true;
    profile.stronger_rho = Rational(merged.stronger_best, m * t);
    profile.stronger_argmax = merged.stronger_arg;
  }
  return profile;
}

TagSize tag_size(const AmdCode& code) {
  TagSize ts;
  ts.n = code.n;
  ts.m = code.m;
  ts.ratio = Rational(code.n, code.m);
  ts.bits = std::log2(ts.ratio.to_double());
  return ts;
}

}  // namespace amdkit
