#include "wvg/game.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "wvg/error.hpp"

namespace wvg {

namespace {

using Mask = Coalition::Mask;

std::vector<std::uint64_t> empty_bitmap(int n) {
  const std::size_t count = std::size_t{1} << n;
  return std::vector<std::uint64_t>((count + 63) / 64, 0);
}

void set_bit(std::vector<std::uint64_t>& bits, Mask mask) { bits[mask >> 6] |= std::uint64_t{1} << (mask & 63); }

void check_player_count(int n) {
  if (n < 1) throw Error(Errc::InvalidGame, "a game needs at least one player");
  if (n > kMaxPlayers) {
    throw Error(Errc::TooManyPlayers, "explicit game storage supports at most " +
                                          std::to_string(kMaxPlayers) + " players");
  }
}

mpz_class lcm_of_denominators(const WeightedRepresentation& rep) {
  mpz_class l = rep.quota().denominator();
  for (const auto& w : rep.weights()) {
    mpz_class d = w.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

}  // namespace

SimpleGame SimpleGame::from_predicate(int n, const std::function<bool(Mask)>& wins) {
  check_player_count(n);
  auto bits = empty_bitmap(n);
  const Mask count = Mask{1} << n;
  for (Mask s = 0; s < count; ++s) {
    if (wins(s)) set_bit(bits, s);
  }
  SimpleGame g(n, std::move(bits));
  g.validate();
  return g;
}

SimpleGame SimpleGame::from_winning_generators(int n, const std::vector<Coalition>& generators) {
  check_player_count(n);
  auto bits = empty_bitmap(n);
  for (const auto& c : generators) {
    if (c.n() != n) throw Error(Errc::InvalidGame, "generator coalition has wrong player count");
    set_bit(bits, c.mask());
  }
  // Upward closure: S wins if S minus one player wins, processed in increasing mask order.
  const Mask count = Mask{1} << n;
  for (Mask s = 1; s < count; ++s) {
    if ((bits[s >> 6] >> (s & 63)) & 1U) continue;
    for (Mask m = s; m != 0; m &= m - 1) {
      const Mask sub = s & ~(m & -m);
      if ((bits[sub >> 6] >> (sub & 63)) & 1U) {
        set_bit(bits, s);
        break;
      }
    }
  }
  SimpleGame g(n, std::move(bits));
  g.validate();
  return g;
}

void SimpleGame::validate() const {
  if (wins(Mask{0})) throw Error(Errc::InvalidGame, "the empty coalition must lose");
  if (!wins(full_mask(n_))) throw Error(Errc::InvalidGame, "the grand coalition must win");
  const Mask count = Mask{1} << n_;
  for (Mask s = 0; s < count; ++s) {
    if (!wins(s)) continue;
    for (int i = 0; i < n_; ++i) {
      if (!wins(s | (Mask{1} << i))) throw Error(Errc::InvalidGame, "game is not monotone");
    }
  }
}

WeightedRepresentation::WeightedRepresentation(Rational quota, RationalVector weights)
    : quota_(std::move(quota)), weights_(std::move(weights)) {
  if (weights_.empty()) throw Error(Errc::InvalidRepresentation, "no players");
  for (const auto& w : weights_) {
    if (w.sign() < 0) throw Error(Errc::InvalidRepresentation, "negative weight " + w.str());
  }
  if (quota_.sign() <= 0) throw Error(Errc::InvalidRepresentation, "quota must be positive");
  if (quota_ > total()) throw Error(Errc::InvalidRepresentation, "quota exceeds the weight total");
}

WeightedRepresentation WeightedRepresentation::normalized() const {
  const Rational t = total();
  RationalVector w;
  w.reserve(weights_.size());
  for (const auto& x : weights_) w.push_back(x / t);
  return WeightedRepresentation(quota_ / t, std::move(w));
}

Rational WeightedRepresentation::weight_of(const Coalition& s) const {
  if (s.n() != n()) throw Error(Errc::DimensionMismatch, "coalition player count differs from representation");
  mpq_class acc(0);
  for (int p : s.members()) acc += weights_[static_cast<std::size_t>(p)].mpq();
  return Rational(acc);
}

Outcome evaluate(const WeightedRepresentation& rep, const Coalition& s) {
  return rep.weight_of(s) >= rep.quota() ? Outcome::Winning : Outcome::Losing;
}

SimpleGame realize(const WeightedRepresentation& rep) {
  const int n = rep.n();
  check_player_count(n);
  // Integer weights over a common denominator, then a Gray-code walk so each
  // coalition costs one addition.
  const mpz_class scale = lcm_of_denominators(rep);
  std::vector<mpz_class> iw;
  iw.reserve(static_cast<std::size_t>(n));
  mpz_class total = 0;
  for (const auto& w : rep.weights()) {
    iw.emplace_back(w.numerator() * (scale / w.denominator()));
    total += iw.back();
  }
  const mpz_class iq = rep.quota().numerator() * (scale / rep.quota().denominator());

  auto bits = empty_bitmap(n);
  const Mask count = Mask{1} << n;
  if (total.fits_slong_p()) {
    std::vector<long> w64;
    for (const auto& x : iw) w64.push_back(x.get_si());
    const long q64 = iq.get_si();
    long acc = 0;
    Mask gray = 0;
    for (Mask k = 0; k < count; ++k) {
      if (k != 0) {
        const int flip = std::countr_zero(k);
        gray ^= Mask{1} << flip;
        acc += ((gray >> flip) & 1U) ? w64[static_cast<std::size_t>(flip)] : -w64[static_cast<std::size_t>(flip)];
      }
      if (acc >= q64) set_bit(bits, gray);
    }
  } else {
    mpz_class acc = 0;
    Mask gray = 0;
    for (Mask k = 0; k < count; ++k) {
      if (k != 0) {
        const int flip = std::countr_zero(k);
        gray ^= Mask{1} << flip;
        if ((gray >> flip) & 1U) {
          acc += iw[static_cast<std::size_t>(flip)];
        } else {
          acc -= iw[static_cast<std::size_t>(flip)];
        }
      }
      if (acc >= iq) set_bit(bits, gray);
    }
  }
  return SimpleGame::from_predicate(n, [&bits](Mask s) { return ((bits[s >> 6] >> (s & 63)) & 1U) != 0; });
}

std::vector<Coalition> minimal_winning(const SimpleGame& v) {
  const int n = v.n();
  std::vector<Coalition> out;
  const Mask count = Mask{1} << n;
  for (Mask s = 1; s < count; ++s) {
    if (!v.wins(s)) continue;
    bool minimal = true;
    for (Mask m = s; m != 0 && minimal; m &= m - 1) minimal = !v.wins(s & ~(m & -m));
    if (minimal) out.emplace_back(n, s);
  }
  return out;
}

std::vector<Coalition> maximal_losing(const SimpleGame& v) {
  const int n = v.n();
  const Mask all = full_mask(n);
  std::vector<Coalition> out;
  const Mask count = Mask{1} << n;
  for (Mask s = 0; s < count; ++s) {
    if (v.wins(s)) continue;
    bool maximal = true;
    for (Mask m = all & ~s; m != 0 && maximal; m &= m - 1) maximal = v.wins(s | (m & -m));
    if (maximal) out.emplace_back(n, s);
  }
  return out;
}

SimpleGame dual(const SimpleGame& v) {
  const Mask all = full_mask(v.n());
  return SimpleGame::from_predicate(v.n(), [&v, all](Mask s) { return !v.wins(all & ~s); });
}

Rational min_losing_slack(const WeightedRepresentation& rep) {
  const SimpleGame v = realize(rep);
  // The heaviest losing coalition is maximal losing.
  Rational heaviest(0);
  for (const auto& t : maximal_losing(v)) heaviest = max(heaviest, rep.weight_of(t));
  return rep.quota() - heaviest;
}

WeightedRepresentation dual_representation(const WeightedRepresentation& rep, std::optional<Rational> epsilon) {
  if (!rep.is_normalized()) throw Error(Errc::NotNormalized, "dual_representation needs normalized weights");
  const Rational slack = min_losing_slack(rep);
  const Rational eps = epsilon.value_or(slack / Rational(2));
  if (eps.sign() <= 0) throw Error(Errc::OutOfRange, "epsilon must be positive");
  if (eps >= slack) {
    throw Error(Errc::EpsilonTooLarge, "epsilon " + eps.str() + " must be below the losing slack " + slack.str());
  }
  return WeightedRepresentation(Rational(1) - rep.quota() + eps, rep.weights());
}

int PlayerClassification::class_of(int player) const {
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (std::ranges::find(classes[c], player) != classes[c].end()) return static_cast<int>(c);
  }
  return -1;
}

bool is_null_player(const SimpleGame& v, int player) {
  const Mask bit = Mask{1} << player;
  const Mask count = Mask{1} << v.n();
  for (Mask s = 0; s < count; ++s) {
    if ((s & bit) == 0 && v.wins(s) != v.wins(s | bit)) return false;
  }
  return true;
}

bool are_equivalent(const SimpleGame& v, int i, int j) {
  if (i == j) return true;
  const Mask bi = Mask{1} << i;
  const Mask bj = Mask{1} << j;
  const Mask count = Mask{1} << v.n();
  for (Mask s = 0; s < count; ++s) {
    if ((s & (bi | bj)) != 0) continue;
    if (v.wins(s | bi) != v.wins(s | bj)) return false;
  }
  return true;
}

PlayerClassification classify_players(const SimpleGame& v) {
  PlayerClassification out;
  const int n = v.n();
  out.roles.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (v.wins(Mask{1} << i)) {
      out.roles.push_back(PlayerRole::Passer);
    } else if (is_null_player(v, i)) {
      out.roles.push_back(PlayerRole::Null);
    } else {
      out.roles.push_back(PlayerRole::Neither);
    }
  }
  for (int i = 0; i < n; ++i) {
    bool placed = false;
    for (auto& cls : out.classes) {
      if (are_equivalent(v, cls.front(), i)) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) out.classes.push_back({i});
  }
  return out;
}

}  // namespace wvg
