#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "morita/check.hpp"
#include "morita/parallel.hpp"

namespace morita {

// A bicategory instance: opaque 0/1/2-cells with composition, identities and
// the coherence cells. vcomp(a2, a1) is "a2 after a1" in a Hom-category;
// hcomp composes 1-cells f in Hom(B,A), g in Hom(C,B) to fg in Hom(C,A).
template <class I>
concept Bicategory = requires(const I& b, const typename I::Obj& A,
                              const typename I::One& f, const typename I::Two& x) {
  { b.eq0(A, A) } -> std::convertible_to<bool>;
  { b.eq1(f, f) } -> std::convertible_to<bool>;
  { b.eq2(x, x) } -> std::convertible_to<bool>;
  { b.src0(f) } -> std::convertible_to<typename I::Obj>;
  { b.tgt0(f) } -> std::convertible_to<typename I::Obj>;
  { b.src1(x) } -> std::convertible_to<typename I::One>;
  { b.tgt1(x) } -> std::convertible_to<typename I::One>;
  { b.id1(A) } -> std::convertible_to<typename I::One>;
  { b.hcomp1(f, f) } -> std::convertible_to<typename I::One>;
  { b.id2(f) } -> std::convertible_to<typename I::Two>;
  { b.hcomp2(x, x) } -> std::convertible_to<typename I::Two>;
  { b.vcomp(x, x) } -> std::convertible_to<typename I::Two>;
  { b.associator(f, f, f) } -> std::convertible_to<typename I::Two>;
  { b.associator_inv(f, f, f) } -> std::convertible_to<typename I::Two>;
  { b.lunitor(f) } -> std::convertible_to<typename I::Two>;
  { b.lunitor_inv(f) } -> std::convertible_to<typename I::Two>;
  { b.runitor(f) } -> std::convertible_to<typename I::Two>;
  { b.runitor_inv(f) } -> std::convertible_to<typename I::Two>;
  { b.validate2(x) } -> std::convertible_to<ValidationReport>;
  { b.diff2(x, x) } -> std::convertible_to<std::string>;
};

// Optional capability: exact linear solving of hcomp2(id2(f), x) = kappa.
template <class Two>
struct WhiskerSolve {
  std::optional<Two> solution;
  // dimension of the kernel of the combined homogeneous system in (x, lambda),
  // lambda scaling the right-hand side; 1 means a unique normalized solution
  std::size_t kernel_dim{0};
};

template <class I>
concept SolvableBicategory = Bicategory<I> &&
    requires(const I& b, const typename I::One& f, const typename I::Two& x) {
      { b.solve_right_whisker(f, f, f, x) }
          -> std::convertible_to<WhiskerSolve<typename I::Two>>;
    };

// Optional capability: epi tests and inversion of 2-cells.
template <class I>
concept EpiBicategory = Bicategory<I> &&
    requires(const I& b, const typename I::Two& x) {
      { b.is_epi(x) } -> std::convertible_to<bool>;
      { b.try_invert(x) } -> std::convertible_to<std::optional<typename I::Two>>;
    };

enum class CheckStatus { pass, fail, error };

struct AxiomCheck {
  std::string axiom;
  std::string sample;
  CheckStatus status{CheckStatus::pass};
  std::string witness;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (c.status != CheckStatus::pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks)
      if (c.status != CheckStatus::pass) ++n;
    return n;
  }
};

// Sampled cell tuples to feed the axiom checker. Tuples must be composable;
// non-composable samples surface as error entries in the report.
template <Bicategory I>
struct SampleSet {
  using One = typename I::One;
  using Two = typename I::Two;
  std::vector<std::array<One, 4>> quads;      // pentagon: f, g, h, e
  std::vector<std::array<One, 2>> pairs;      // triangle and (0.1): f, g
  std::vector<One> singles;                   // (0.2) and unitor equality
  std::vector<std::array<Two, 3>> nat_assoc;  // horizontally composable x, y, z
  std::vector<Two> nat_unit;                  // naturality of unitors
  std::vector<std::array<Two, 4>> interchange;  // x2 after x1, y2 after y1
  std::vector<std::array<Two, 3>> vtriples;     // vertically composable
};

namespace detail {

template <Bicategory I, class F>
AxiomCheck run_check(const I& inst, const std::string& axiom,
                     const std::string& sample, F&& body) {
  AxiomCheck c{axiom, sample, CheckStatus::pass, ""};
  try {
    body(c);
  } catch (const std::exception& e) {
    c.status = CheckStatus::error;
    c.witness = e.what();
  }
  return c;
}

}  // namespace detail

// Verifies the pentagon and triangle axioms, the derived unit diagrams, the
// naturality of the coherence cells at the supplied 2-cells, the interchange
// law, and the Hom-category laws, all by exact equality. Samples are
// independent and evaluated in parallel; the report order is deterministic.
template <Bicategory I>
AxiomReport check_axioms(const I& b, const SampleSet<I>& s) {
  using Two = typename I::Two;
  std::vector<std::function<AxiomCheck()>> jobs;

  auto expect_eq = [&b](AxiomCheck& c, const Two& lhs, const Two& rhs) {
    if (!b.eq2(lhs, rhs)) {
      c.status = CheckStatus::fail;
      c.witness = b.diff2(lhs, rhs);
    }
  };

  for (std::size_t i = 0; i < s.quads.size(); ++i) {
    const auto& t = s.quads[i];
    jobs.push_back([&, i, t]() {
      return detail::run_check(b, "pentagon", "quad " + std::to_string(i),
                               [&](AxiomCheck& c) {
        const auto &f = t[0], &g = t[1], &h = t[2], &e = t[3];
        const auto fg = b.hcomp1(f, g);
        const auto gh = b.hcomp1(g, h);
        const auto he = b.hcomp1(h, e);
        const auto lhs = b.vcomp(b.associator(f, g, he), b.associator(fg, h, e));
        const auto rhs = b.vcomp(
            b.hcomp2(b.id2(f), b.associator(g, h, e)),
            b.vcomp(b.associator(f, gh, e), b.hcomp2(b.associator(f, g, h), b.id2(e))));
        expect_eq(c, lhs, rhs);
      });
    });
  }

  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    const auto& t = s.pairs[i];
    const std::string tag = "pair " + std::to_string(i);
    jobs.push_back([&, t, tag]() {
      return detail::run_check(b, "triangle", tag, [&](AxiomCheck& c) {
        const auto &f = t[0], &g = t[1];
        const auto mid = b.id1(b.src0(f));
        const auto lhs = b.vcomp(b.hcomp2(b.id2(f), b.lunitor(g)),
                                 b.associator(f, mid, g));
        const auto rhs = b.hcomp2(b.runitor(f), b.id2(g));
        expect_eq(c, lhs, rhs);
      });
    });
    jobs.push_back([&, t, tag]() {
      return detail::run_check(b, "runitor of a composite (0.1)", tag,
                               [&](AxiomCheck& c) {
        const auto &f = t[0], &g = t[1];
        const auto fg = b.hcomp1(f, g);
        const auto idc = b.id1(b.src0(g));
        const auto lhs = b.vcomp(b.hcomp2(b.id2(f), b.runitor(g)),
                                 b.associator(f, g, idc));
        expect_eq(c, lhs, b.runitor(fg));
      });
    });
    jobs.push_back([&, t, tag]() {
      return detail::run_check(b, "lunitor of a composite (0.1)", tag,
                               [&](AxiomCheck& c) {
        const auto &f = t[0], &g = t[1];
        const auto fg = b.hcomp1(f, g);
        const auto ida = b.id1(b.tgt0(f));
        const auto lhs = b.vcomp(b.hcomp2(b.lunitor(f), b.id2(g)),
                                 b.associator_inv(ida, f, g));
        expect_eq(c, lhs, b.lunitor(fg));
      });
    });
  }

  for (std::size_t i = 0; i < s.singles.size(); ++i) {
    const auto& f = s.singles[i];
    const std::string tag = "cell " + std::to_string(i);
    jobs.push_back([&, f, tag]() {
      return detail::run_check(b, "unit square (0.2)", tag, [&](AxiomCheck& c) {
        const auto ida = b.id1(b.tgt0(f));
        const auto idb = b.id1(b.src0(f));
        const auto lhs = b.vcomp(b.runitor(f), b.hcomp2(b.lunitor(f), b.id2(idb)));
        const auto rhs = b.vcomp(
            b.lunitor(f),
            b.vcomp(b.hcomp2(b.id2(ida), b.runitor(f)), b.associator(ida, f, idb)));
        expect_eq(c, lhs, rhs);
      });
    });
    jobs.push_back([&, f, tag]() {
      return detail::run_check(b, "unitors agree on identity cells", tag,
                               [&](AxiomCheck& c) {
        const auto ida = b.id1(b.tgt0(f));
        expect_eq(c, b.runitor(ida), b.lunitor(ida));
      });
    });
    jobs.push_back([&, f, tag]() {
      return detail::run_check(b, "coherence cells invertible", tag,
                               [&](AxiomCheck& c) {
        expect_eq(c, b.vcomp(b.runitor(f), b.runitor_inv(f)), b.id2(f));
        if (c.status != CheckStatus::pass) return;
        expect_eq(c, b.vcomp(b.lunitor(f), b.lunitor_inv(f)), b.id2(f));
      });
    });
  }

  for (std::size_t i = 0; i < s.nat_assoc.size(); ++i) {
    const auto& t = s.nat_assoc[i];
    jobs.push_back([&, i, t]() {
      return detail::run_check(b, "associator naturality", "triple " + std::to_string(i),
                               [&](AxiomCheck& c) {
        const auto &x = t[0], &y = t[1], &z = t[2];
        const auto f = b.src1(x), g = b.src1(y), h = b.src1(z);
        const auto f2 = b.tgt1(x), g2 = b.tgt1(y), h2 = b.tgt1(z);
        const auto lhs = b.vcomp(b.associator(f2, g2, h2), b.hcomp2(b.hcomp2(x, y), z));
        const auto rhs = b.vcomp(b.hcomp2(x, b.hcomp2(y, z)), b.associator(f, g, h));
        expect_eq(c, lhs, rhs);
      });
    });
  }

  for (std::size_t i = 0; i < s.nat_unit.size(); ++i) {
    const auto& x = s.nat_unit[i];
    const std::string tag = "2-cell " + std::to_string(i);
    jobs.push_back([&, x, tag]() {
      return detail::run_check(b, "runitor naturality", tag, [&](AxiomCheck& c) {
        const auto f = b.src1(x), f2 = b.tgt1(x);
        const auto idb = b.id1(b.src0(f));
        const auto lhs = b.vcomp(x, b.runitor(f));
        const auto rhs = b.vcomp(b.runitor(f2), b.hcomp2(x, b.id2(idb)));
        expect_eq(c, lhs, rhs);
      });
    });
    jobs.push_back([&, x, tag]() {
      return detail::run_check(b, "lunitor naturality", tag, [&](AxiomCheck& c) {
        const auto f = b.src1(x), f2 = b.tgt1(x);
        const auto ida = b.id1(b.tgt0(f));
        const auto lhs = b.vcomp(x, b.lunitor(f));
        const auto rhs = b.vcomp(b.lunitor(f2), b.hcomp2(b.id2(ida), x));
        expect_eq(c, lhs, rhs);
      });
    });
    jobs.push_back([&, x, tag]() {
      return detail::run_check(b, "2-cell validity", tag, [&](AxiomCheck& c) {
        const auto rep = b.validate2(x);
        if (!rep.ok()) {
          c.status = CheckStatus::fail;
          c.witness = rep.summary();
        }
      });
    });
  }

  for (std::size_t i = 0; i < s.interchange.size(); ++i) {
    const auto& t = s.interchange[i];
    jobs.push_back([&, i, t]() {
      return detail::run_check(b, "interchange", "tuple " + std::to_string(i),
                               [&](AxiomCheck& c) {
        const auto &x2 = t[0], &x1 = t[1], &y2 = t[2], &y1 = t[3];
        const auto lhs = b.hcomp2(b.vcomp(x2, x1), b.vcomp(y2, y1));
        const auto rhs = b.vcomp(b.hcomp2(x2, y2), b.hcomp2(x1, y1));
        expect_eq(c, lhs, rhs);
      });
    });
  }

  for (std::size_t i = 0; i < s.vtriples.size(); ++i) {
    const auto& t = s.vtriples[i];
    const std::string tag = "triple " + std::to_string(i);
    jobs.push_back([&, t, tag]() {
      return detail::run_check(b, "vertical composition associative", tag,
                               [&](AxiomCheck& c) {
        const auto &x3 = t[0], &x2 = t[1], &x1 = t[2];
        expect_eq(c, b.vcomp(x3, b.vcomp(x2, x1)), b.vcomp(b.vcomp(x3, x2), x1));
      });
    });
    jobs.push_back([&, t, tag]() {
      return detail::run_check(b, "identity 2-cells neutral", tag, [&](AxiomCheck& c) {
        const auto& x = t[1];
        expect_eq(c, b.vcomp(x, b.id2(b.src1(x))), x);
        if (c.status != CheckStatus::pass) return;
        expect_eq(c, b.vcomp(b.id2(b.tgt1(x)), x), x);
      });
    });
  }

  AxiomReport report;
  report.checks.resize(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) { report.checks[i] = jobs[i](); });
  return report;
}

}  // namespace morita
