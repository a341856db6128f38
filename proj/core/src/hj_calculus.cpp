#include <horikawa/hj_calculus.hpp>

#include <algorithm>
#include <ostream>
#include <set>

namespace horikawa {

Chain::Chain(std::vector<Integer> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("chain must be nonempty");
  for (const auto& e : entries_)
    if (e < 2) throw DomainError("chain entries must be >= 2, got " + e.get_str());
}

Chain::Chain(std::initializer_list<long> entries) : Chain(std::vector<Integer>(entries.begin(), entries.end())) {}

Chain Chain::reversed() const {
  std::vector<Integer> r(entries_.rbegin(), entries_.rend());
  return Chain(std::move(r));
}

bool Chain::all_twos() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& e) { return e == 2; });
}

bool Chain::is_two_gorenstein_seed() const {
  if (entries_.size() == 1) return entries_[0] == 4;
  if (entries_.front() != 3 || entries_.back() != 3) return false;
  return std::all_of(entries_.begin() + 1, entries_.end() - 1, [](const Integer& e) { return e == 2; });
}

std::string Chain::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += entries_[i].get_str();
  }
  return s + "]";
}

std::strong_ordering operator<=>(const Chain& a, const Chain& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  for (std::size_t i = 0; i < a.length(); ++i) {
    int s = cmp(a[i], b[i]);
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Chain& c) { return os << c.str(); }

CyclicQuotientSingularity CyclicQuotientSingularity::make(const Integer& n, const Integer& q) {
  if (!(q > 0 && q < n)) throw DomainError("need 0 < q < n for 1/n(1,q), got n=" + n.get_str() + " q=" + q.get_str());
  Integer g = gcd(n, q);
  if (g != 1) throw DomainError("need gcd(n, q) = 1, got gcd(" + n.get_str() + "," + q.get_str() + ") = " + g.get_str());
  return {n, q};
}

std::string_view kind_name(ChainKind k) {
  switch (k) {
    case ChainKind::DuVal: return "DuVal";
    case ChainKind::T: return "T";
    case ChainKind::NotT: return "NotT";
  }
  return "?";
}

Chain hj_expand(const CyclicQuotientSingularity& s) {
  CyclicQuotientSingularity::make(s.n, s.q);
  std::vector<Integer> out;
  if (s.n.fits_slong_p()) {
    long n = s.n.get_si(), q = s.q.get_si();
    while (q != 0) {
      const long e = (n + q - 1) / q;
      out.emplace_back(e);
      const long r = e * q - n;
      n = q;
      q = r;
    }
    return Chain(std::move(out));
  }
  Integer n = s.n, q = s.q, e, r;
  while (q != 0) {
    // e = ceil(n / q) and n = e*q + r with r <= 0; next pair is (q, -r)
    mpz_cdiv_qr(e.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t());
    out.push_back(e);
    mpz_swap(n.get_mpz_t(), q.get_mpz_t());
    mpz_neg(q.get_mpz_t(), r.get_mpz_t());
  }
  return Chain(std::move(out));
}

namespace {

// Numerator and denominator of the nested fraction, evaluated from the
// tail. Consecutive convergents have determinant 1, so they are coprime.
bool eval_pair_small(const Chain& c, long& num_out, long& den_out) {
  if (!c.back().fits_slong_p()) return false;
  long num = c.back().get_si(), den = 1;
  for (std::size_t i = c.length() - 1; i-- > 0;) {
    if (!c[i].fits_slong_p()) return false;
    long t;
    if (__builtin_mul_overflow(c[i].get_si(), num, &t) || __builtin_sub_overflow(t, den, &t)) return false;
    den = num;
    num = t;
  }
  num_out = num;
  den_out = den;
  return true;
}

std::pair<Integer, Integer> eval_pair(const Chain& c) {
  long sn, sd;
  if (eval_pair_small(c, sn, sd)) return {Integer(sn), Integer(sd)};
  Integer num = c.back(), den = 1, t;
  for (std::size_t i = c.length() - 1; i-- > 0;) {
    mpz_mul(t.get_mpz_t(), c[i].get_mpz_t(), num.get_mpz_t());
    mpz_sub(t.get_mpz_t(), t.get_mpz_t(), den.get_mpz_t());
    mpz_swap(den.get_mpz_t(), num.get_mpz_t());
    mpz_swap(num.get_mpz_t(), t.get_mpz_t());
  }
  return {num, den};
}

}  // namespace

Rational hj_eval(const Chain& c) {
  auto [num, den] = eval_pair(c);
  // Already coprime and den > 0, so no canonicalisation needed.
  Rational out;
  mpz_swap(mpq_numref(out.get_mpq_t()), num.get_mpz_t());
  mpz_swap(mpq_denref(out.get_mpq_t()), den.get_mpz_t());
  return out;
}

CyclicQuotientSingularity singularity_of(const Chain& c) {
  auto [num, den] = eval_pair(c);
  return {num, den};
}

ChainClassification classify_singularity(const CyclicQuotientSingularity& raw) {
  const auto s = CyclicQuotientSingularity::make(raw.n, raw.q);
  ChainClassification out;
  if (s.q == s.n - 1) {
    out.kind = ChainKind::DuVal;
    return out;
  }
  // n = delta m^2 and q + 1 = delta m a force gcd(n, q + 1) = delta m.
  Integer qp1 = s.q + 1;
  Integer g = gcd(s.n, qp1);
  Integer m = s.n / g;
  if (m < 2 || g % m != 0) {
    out.kind = ChainKind::NotT;
    return out;
  }
  out.kind = ChainKind::T;
  out.t = TParameters{g / m, m, qp1 / g};
  out.two_gorenstein = (m == 2);
  return out;
}

ReductionResult reduce_chain(const Chain& c) {
  ReductionResult res;
  if (c.all_twos()) {
    res.kind = ChainKind::DuVal;
    return res;
  }
  std::vector<Integer> e = c.entries();
  while (true) {
    Chain cur(e);
    if (cur.is_two_gorenstein_seed()) {
      res.kind = ChainKind::T;
      res.delta = cur.length() == 1 ? Integer(1) : Integer(cur.length());
      return res;
    }
    if (e.size() < 2) return res;
    if (e.front() == 2 && e.back() >= 3) {
      e.erase(e.begin());
      e.back() -= 1;
    } else if (e.back() == 2 && e.front() >= 3) {
      e.pop_back();
      e.front() -= 1;
    } else {
      return res;
    }
    ++res.steps;
  }
}

ChainClassification classify_chain(const Chain& c) {
  const ReductionResult red = reduce_chain(c);
  const ChainClassification cls = classify_singularity(singularity_of(c));
  bool agree = red.kind == cls.kind;
  if (agree && cls.kind == ChainKind::T) agree = red.delta && *red.delta == cls.t->delta;
  if (!agree)
    throw InvariantError("chain " + c.str() + ": reduction gives " + std::string(kind_name(red.kind)) +
                         ", singularity form gives " + std::string(kind_name(cls.kind)));
  if (cls.kind == ChainKind::T && cls.two_gorenstein != c.is_two_gorenstein_seed())
    throw InvariantError("chain " + c.str() + ": 2-Gorenstein flag disagrees with seed shape");
  return cls;
}

Chain grow_chain(const Chain& c, Side side) {
  std::vector<Integer> e = c.entries();
  if (side == Side::Left) {
    e.back() += 1;
    e.insert(e.begin(), Integer(2));
  } else {
    e.front() += 1;
    e.push_back(Integer(2));
  }
  return Chain(std::move(e));
}

std::vector<Chain> enumerate_t_chains(std::size_t max_length, EnumerateOptions opts) {
  if (max_length < 1) throw DomainError("max_length must be >= 1");
  std::set<Chain> seen;
  std::vector<Chain> frontier;
  frontier.push_back(Chain{4});
  for (std::size_t len = 2; len <= max_length; ++len) {
    std::vector<Integer> seed(len, Integer(2));
    seed.front() = 3;
    seed.back() = 3;
    frontier.emplace_back(std::move(seed));
  }
  for (auto& s : frontier) seen.insert(s);
  if (!opts.only_two_gorenstein) {
    while (!frontier.empty()) {
      std::vector<Chain> next;
      for (const auto& c : frontier) {
        if (c.length() >= max_length) continue;
        for (Side side : {Side::Left, Side::Right}) {
          Chain g = grow_chain(c, side);
          if (seen.insert(g).second) next.push_back(std::move(g));
        }
      }
      frontier = std::move(next);
    }
  }
  std::vector<Chain> out;
  out.reserve(seen.size());
  for (const auto& c : seen) {
    if (opts.dedupe_reversals && c.reversed() < c) continue;
    out.push_back(c);
  }
  return out;
}

Integer k2_contribution(const Chain& c) {
  const auto cls = classify_chain(c);
  if (cls.kind != ChainKind::T) throw DomainError("k2_contribution needs a T-chain, got " + c.str());
  return Integer(static_cast<unsigned long>(c.length())) - cls.t->delta + 1;
}

}  // namespace horikawa
