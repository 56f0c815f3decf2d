#include "recon/classify.hpp"

#include <stdexcept>

namespace recon {

SequenceSet pinned_insertions(const Sequence& x, int l, int k) {
  if (!(1 <= l && l < k && k <= x.length() + 2)) throw std::invalid_argument("slot order violated");
  int q = x.q();
  std::vector<Sequence> out;
  out.reserve(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
  for (int c1 = 0; c1 < q; ++c1) {
    for (int c2 = 0; c2 < q; ++c2) {
      std::vector<Symbol> z;
      z.reserve(static_cast<std::size_t>(x.length() + 2));
      int src = 0;
      for (int pos = 1; pos <= x.length() + 2; ++pos) {
        if (pos == l) {
          z.push_back(static_cast<Symbol>(c1));
        } else if (pos == k) {
          z.push_back(static_cast<Symbol>(c2));
        } else {
          z.push_back(x[src++]);
        }
      }
      out.emplace_back(q, std::move(z));
    }
  }
  return SequenceSet::of(std::move(out));
}

int IntersectionProfile::total() const {
  int sum = 0;
  for (int c : counts) sum += c;
  return sum;
}

namespace {

// z with positions {d1, d2} removed equals target (1-based, d1 < d2).
bool restriction_matches(const Sequence& z, int d1, int d2, const Sequence& target) {
  int src = 0;
  for (int pos = 1; pos <= z.length(); ++pos) {
    if (pos == d1 || pos == d2) continue;
    if (z[pos - 1] != target[src++]) return false;
  }
  return true;
}

// Slot membership patterns on a stripped pair of core length m. Each slot
// pins one index pair (l, k) with 1 < l < k < m+2 and fixes which of the two
// insertion positions of z recover xm and which recover ym.
bool slot_matches(int slot1, const Sequence& z, const Sequence& xm, const Sequence& ym, int l,
                  int k, int last) {
  switch (slot1) {
    case 1:
      return restriction_matches(z, l, k, xm) && restriction_matches(z, 1, last, ym);
    case 2:
      return restriction_matches(z, l, last, xm) && restriction_matches(z, 1, k, ym);
    case 3:
      return restriction_matches(z, k, last, xm) && restriction_matches(z, 1, l, ym);
    case 4:
      return restriction_matches(z, 1, last, xm) && restriction_matches(z, l, k, ym);
    case 5:
      return restriction_matches(z, 1, k, xm) && restriction_matches(z, l, last, ym);
    case 6:
      return restriction_matches(z, 1, l, xm) && restriction_matches(z, k, last, ym);
    default:
      throw std::logic_error("bad slot");
  }
}

}  // namespace

IntersectionProfile classify_stripped_pair(const Sequence& xm, const Sequence& ym) {
  if (xm.q() != ym.q()) throw std::invalid_argument("alphabet mismatch");
  if (xm.length() != ym.length()) throw std::invalid_argument("length mismatch");
  int m = xm.length();
  if (m < 2) throw std::invalid_argument("core length below 2");
  if (xm.at1(1) == ym.at1(1) || xm.at1(m) == ym.at1(m)) {
    throw std::invalid_argument("boundary symbols must differ");
  }
  if (levenshtein(xm, ym) < 4) throw std::invalid_argument("insdel distance below 4");

  SequenceSet inter = ball_intersection(xm, ym, 2, BallKind::insertion);
  IntersectionProfile profile;
  int last = m + 2;
  for (const Sequence& z : inter) {
    for (int slot = 1; slot <= 6; ++slot) {
      bool found = false;
      for (int l = 2; l < last && !found; ++l) {
        for (int k = l + 1; k < last && !found; ++k) {
          if (slot_matches(slot, z, xm, ym, l, k, last)) {
            auto idx = static_cast<std::size_t>(slot - 1);
            profile.counts[idx] += 1;
            if (!profile.witness[idx]) profile.witness[idx] = SlotWitness{z, l, k};
            found = true;
          }
        }
      }
    }
  }
  return profile;
}

IntersectionProfile classify_pair(const Sequence& x, const Sequence& y) {
  if (levenshtein(x, y) < 4) throw std::invalid_argument("insdel distance below 4");
  PairDecomposition d = decompose_pair(x, y);
  return classify_stripped_pair(d.x_mid, d.y_mid);
}

SingleInsertionIntersection single_insertion_intersection(const Sequence& x, const Sequence& y) {
  if (x == y) throw std::invalid_argument("identical sequences");
  SingleInsertionIntersection result;
  result.elements = ball_intersection(x, y, 1, BallKind::insertion);
  if (result.elements.size() == 2) {
    int n = x.length();
    int l = 1;
    while (x.at1(l) == y.at1(l)) ++l;
    int k = n;
    while (x.at1(k) == y.at1(k)) --k;
    result.indices = std::make_pair(l, k);
    // Closed forms: insert y_l into x before position l, and y_k after
    // position k; verified against the enumerated intersection.
    Sequence z1 = concat(x.slice1(1, l - 1), concat(Sequence(x.q(), {y.at1(l)}), x.slice1(l, n)));
    Sequence z2 = concat(x.slice1(1, k), concat(Sequence(x.q(), {y.at1(k)}), x.slice1(k + 1, n)));
    SequenceSet rebuilt = SequenceSet::of({z1, z2});
    if (!(rebuilt == result.elements)) {
      throw std::logic_error("closed-form witnesses disagree with enumeration");
    }
  }
  return result;
}

UnitIntersectionStructure unit_intersection_structure(const Sequence& x, const Sequence& y) {
  SequenceSet inter = ball_intersection(x, y, 1, BallKind::insertion);
  if (inter.size() != 1) throw std::invalid_argument("intersection size != 1");
  PairDecomposition d = decompose_pair(x, y);
  const Sequence& xm = d.x_mid;
  const Sequence& ym = d.y_mid;
  int m = xm.length();

  std::vector<UnitIntersectionStructure> matches;
  auto try_direction = [&](const Sequence& lead, const Sequence& follow, bool swapped) {
    // lead = a c w b, follow = c w b d: the tail of lead equals the head of
    // follow shifted by one.
    if (m < 2) return;
    if (lead.slice1(2, m) != follow.slice1(1, m - 1)) return;
    UnitIntersectionStructure s;
    s.swapped = swapped;
    if (m == 2) {
      Symbol a = lead.at1(1), c = lead.at1(2), dd = follow.at1(2);
      if (a == c || c == dd || a == dd) return;
      s.kind = UnitIntersectionStructure::Case::short_pair;
      s.a = a;
      s.c = c;
      s.d = dd;
    } else {
      Symbol a = lead.at1(1), c = lead.at1(2), b = lead.at1(m), dd = follow.at1(m);
      if (a == c || b == dd) return;
      if (lead.slice1(1, m - 1) == follow.slice1(2, m)) return;  // would give two witnesses
      s.kind = UnitIntersectionStructure::Case::shifted_pair;
      s.a = a;
      s.b = b;
      s.c = c;
      s.d = dd;
      s.w = lead.slice1(3, m - 1);
    }
    matches.push_back(std::move(s));
  };
  try_direction(xm, ym, false);
  try_direction(ym, xm, true);
  if (matches.empty()) throw std::logic_error("pair matches neither structural case");
  UnitIntersectionStructure out = matches.front();
  out.match_count = static_cast<int>(matches.size());
  return out;
}

std::optional<AlternatingEndsWitness> match_alternating_ends(const Sequence& xm,
                                                             const Sequence& ym) {
  if (xm.q() != ym.q()) throw std::invalid_argument("alphabet mismatch");
  if (xm.length() != ym.length()) throw std::invalid_argument("length mismatch");
  int m = xm.length();
  if (m < 2) return std::nullopt;
  if (xm.at1(1) == ym.at1(1) || xm.at1(m) == ym.at1(m)) return std::nullopt;
  Symbol a = xm.at1(1), a2 = ym.at1(1);
  int q = xm.q();
  for (int t = 1; t + 1 <= m; ++t) {
    for (int s = 1; t + s <= m; ++s) {
      Symbol b = xm.at1(m - s + 1), b2 = ym.at1(m - s + 1);
      if (b == b2) continue;
      if (xm.slice1(1, t) != alternating(q, a, a2, t)) continue;
      if (ym.slice1(1, t) != alternating(q, a2, a, t)) continue;
      if (xm.slice1(m - s + 1, m) != alternating(q, b, b2, s)) continue;
      if (ym.slice1(m - s + 1, m) != alternating(q, b2, b, s)) continue;
      if (xm.slice1(t + 1, m - s) != ym.slice1(t + 1, m - s)) continue;
      AlternatingEndsWitness w;
      w.t = t;
      w.s = s;
      w.a = a;
      w.a2 = a2;
      w.b = b;
      w.b2 = b2;
      w.w = xm.slice1(t + 1, m - s);
      return w;
    }
  }
  return std::nullopt;
}

namespace {

bool rows_equal(const Sequence& xm, int xlo, int xhi, const Sequence& ym, int ylo, int yhi) {
  // Inverted ranges validate vacuously.
  if (xlo > xhi && ylo > yhi) return true;
  if (xhi - xlo != yhi - ylo) return false;
  if (xlo < 1 || xhi > xm.length() || ylo < 1 || yhi > ym.length()) return false;
  return xm.slice1(xlo, xhi) == ym.slice1(ylo, yhi);
}

// Segment equalities implied by each occupied slot, expressed on the stripped
// cores with the stored index pair.
bool row_ok(int slot1, const Sequence& xm, const Sequence& ym, int l, int k) {
  int m = xm.length();
  switch (slot1) {
    case 1:
      return rows_equal(xm, 2, l - 1, ym, 1, l - 2) && rows_equal(xm, l, k - 2, ym, l, k - 2) &&
             rows_equal(xm, k - 1, m - 1, ym, k, m);
    case 2:
      return rows_equal(xm, 2, l - 1, ym, 1, l - 2) && rows_equal(xm, l, k - 2, ym, l, k - 2) &&
             rows_equal(xm, k, m, ym, k - 1, m - 1);
    case 3:
      return rows_equal(xm, 2, l - 1, ym, 1, l - 2) &&
             rows_equal(xm, l + 1, k - 1, ym, l - 1, k - 3) &&
             rows_equal(xm, k, m, ym, k - 1, m - 1);
    case 4:
      return rows_equal(xm, 1, l - 2, ym, 2, l - 1) && rows_equal(xm, l, k - 2, ym, l, k - 2) &&
             rows_equal(xm, k, m, ym, k - 1, m - 1);
    case 5:
      return rows_equal(xm, 1, l - 2, ym, 2, l - 1) && rows_equal(xm, l, k - 2, ym, l, k - 2) &&
             rows_equal(xm, k - 1, m - 1, ym, k, m);
    case 6:
      return rows_equal(xm, 1, l - 2, ym, 2, l - 1) &&
             rows_equal(xm, l - 1, k - 3, ym, l + 1, k - 1) &&
             rows_equal(xm, k - 1, m - 1, ym, k, m);
    default:
      throw std::logic_error("bad slot");
  }
}

}  // namespace

bool profile_rows_consistent(const Sequence& xm, const Sequence& ym,
                             const IntersectionProfile& profile) {
  for (int slot = 1; slot <= 6; ++slot) {
    const auto& w = profile.witness_for(slot);
    if (!w) continue;
    if (!row_ok(slot, xm, ym, w->l, w->k)) return false;
  }
  return true;
}

CharacterizationVerdict check_characterization(const Sequence& x, const Sequence& y, int N) {
  if (N < 2 || N > 5) throw std::invalid_argument("N out of range [2, 5]");
  if (levenshtein(x, y) < 4) throw std::invalid_argument("insdel distance below 4");
  CharacterizationVerdict verdict;
  SequenceSet inter = ball_intersection(x, y, 2, BallKind::insertion);
  verdict.intersection_size = static_cast<int>(inter.size());
  if (verdict.intersection_size < N) return verdict;
  verdict.triggered = true;

  PairDecomposition d = decompose_pair(x, y);
  IntersectionProfile profile = classify_stripped_pair(d.x_mid, d.y_mid);
  int slots_1245 = profile.occupied(1) + profile.occupied(2) + profile.occupied(4) +
                   profile.occupied(5);
  auto periodic_split = [&]() { return splits_into_periodic_segments(d.x_mid, 4, 5); };

  using Branch = CharacterizationVerdict::Branch;
  switch (N) {
    case 2:
      if (slots_1245 >= 1) {
        verdict.branch = Branch::slot_1245;
      } else if (periodic_split()) {
        verdict.branch = Branch::periodic_split;
      } else {
        verdict.holds = false;
      }
      break;
    case 3:
      if (slots_1245 >= 1) {
        verdict.branch = Branch::slot_1245;
      } else {
        verdict.holds = false;
      }
      break;
    case 4:
      if (match_alternating_ends(d.x_mid, d.y_mid)) {
        verdict.branch = Branch::alternating_ends;
      } else if (periodic_split()) {
        verdict.branch = Branch::periodic_split;
      } else {
        verdict.holds = false;
      }
      break;
    case 5:
      if (periodic_split()) {
        verdict.branch = Branch::periodic_split;
      } else {
        verdict.holds = false;
      }
      break;
    default:
      break;
  }
  return verdict;
}

}  // namespace recon
