#include "wallx/stability.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

namespace wallx {

ClassVec operator+(const ClassVec& a, const ClassVec& b) {
    ClassVec s;
    s.r = a.r + b.r;
    s.d = a.d + b.d;
    if (a.f.has_value() != b.f.has_value())
        throw domain_error("class addition: inconsistent presence of f");
    if (a.f) {
        if (a.f->size() != b.f->size())
            throw domain_error("class addition: flag length mismatch");
        s.f = *a.f;
        for (size_t i = 0; i < s.f->size(); ++i) (*s.f)[i] += (*b.f)[i];
    }
    if (a.v.has_value() != b.v.has_value())
        throw domain_error("class addition: inconsistent presence of v");
    if (a.v) s.v = *a.v + *b.v;
    return s;
}

bool ClassVec::is_zero() const {
    if (r != 0 || d != 0) return false;
    if (f && std::any_of(f->begin(), f->end(), [](long long x) { return x != 0; })) return false;
    if (v && *v != 0) return false;
    return true;
}

std::string ClassVec::to_json() const {
    nlohmann::json j;
    j["r"] = r;
    j["d"] = d;
    if (f) j["f"] = *f;
    if (v) j["v"] = *v;
    return j.dump();
}

std::string ClassVec::to_string() const {
    std::string s = "(" + std::to_string(r) + "," + std::to_string(d);
    if (f) {
        s += ",(";
        for (size_t i = 0; i < f->size(); ++i) s += (i ? "," : "") + std::to_string((*f)[i]);
        s += ")";
    }
    if (v) s += ",v=" + std::to_string(*v);
    return s + ")";
}

ParabolicWeight::ParabolicWeight(std::vector<EpsPoly> c) : c_(std::move(c)) {
    const EpsPoly zero(0), one(1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] < zero || c_[i] > one)
            throw domain_error("parabolic weight: entries must lie in [0, 1]");
        if (i > 0 && c_[i] < c_[i - 1])
            throw domain_error("parabolic weight: entries must be non-decreasing");
    }
}

ParabolicWeight ParabolicWeight::zero(size_t length) {
    return ParabolicWeight(std::vector<EpsPoly>(length, EpsPoly(0)));
}

ParabolicWeight ParabolicWeight::plus(size_t r) {
    std::vector<EpsPoly> c;
    for (size_t i = 1; i <= r; ++i)
        c.push_back(EpsPoly(1) - EpsPoly::eps(static_cast<long long>(i) - 1));
    return ParabolicWeight(std::move(c));
}

ParabolicWeight ParabolicWeight::minus(size_t r) {
    std::vector<EpsPoly> c;
    for (size_t i = 1; i <= r; ++i)
        c.push_back(EpsPoly::eps(static_cast<long long>(r - i)));
    return ParabolicWeight(std::move(c));
}

const EpsPoly& SlopeValue::value() const {
    if (!finite_) throw domain_error("slope: +infinity has no finite value");
    return *finite_;
}

bool operator==(const SlopeValue& a, const SlopeValue& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
    return *a.finite_ == *b.finite_;
}

std::partial_ordering operator<=>(const SlopeValue& a, const SlopeValue& b) {
    if (a.is_infinite() && b.is_infinite()) return std::partial_ordering::equivalent;
    if (a.is_infinite()) return std::partial_ordering::greater;
    if (b.is_infinite()) return std::partial_ordering::less;
    auto c = *a.finite_ <=> *b.finite_;
    return c < 0   ? std::partial_ordering::less
           : c > 0 ? std::partial_ordering::greater
                   : std::partial_ordering::equivalent;
}

SlopeValue SlopeFunction::operator()(const ClassVec& cls) const {
    if (cls.is_zero()) throw domain_error("slope: zero class");
    if (cls.r == 0) return SlopeValue::infinity();
    EpsPoly num(Rational(cls.d));
    // a length-0 weight acts as the zero weight on any flag type
    if (cls.f && weight.length() > 0) {
        if (cls.f->size() != weight.length())
            throw domain_error("slope: flag/weight length mismatch");
        for (size_t i = 0; i < cls.f->size(); ++i)
            num -= weight[i] * Rational((*cls.f)[i]);
    }
    if (cls.v) num += pair_weight * Rational(*cls.v);
    return SlopeValue(num / Rational(cls.r));
}

SlopeValue slope_mu_c(const ClassVec& cls, const ParabolicWeight& c) {
    return SlopeFunction{c, EpsPoly(0)}(cls);
}

SlopeValue slope_mu_c_eps(const ClassVec& cls, const ParabolicWeight& c,
                          const EpsPoly& pair_weight) {
    return SlopeFunction{c, pair_weight}(cls);
}

bool is_generic(const ParabolicWeight& c, long long r, long long d,
                const std::vector<long long>& f) {
    if (r <= 0) throw domain_error("genericity: rank must be positive");
    if (f.size() != c.length()) throw domain_error("genericity: flag/weight length mismatch");
    ClassVec full{r, d, f, std::nullopt};
    EpsPoly mu = slope_mu_c(full, c).value();
    // Scan subvector types f' <= f with 0 < |f'| < r; the unique d'
    // solving mu_c(r', d', f') = mu is r'*mu + sum c_i f'_i, and c is
    // generic iff it is never an integer.
    size_t l = f.size();
    std::vector<long long> fp(l, 0);
    while (true) {
        // advance odometer over 0 <= f'_i <= f_i
        size_t i = 0;
        for (; i < l; ++i) {
            if (fp[i] < f[i]) {
                ++fp[i];
                break;
            }
            fp[i] = 0;
        }
        if (i == l) break;
        long long rp = std::accumulate(fp.begin(), fp.end(), 0LL);
        if (rp <= 0 || rp >= r) continue;
        EpsPoly dprime = mu * Rational(rp);
        for (size_t j = 0; j < l; ++j) dprime += c[j] * Rational(fp[j]);
        if (dprime.is_integer()) return false;
    }
    return true;
}

bool is_strongly_generic(const ParabolicWeight& c, long long r) {
    if (r <= 0) throw domain_error("genericity: rank must be positive");
    if (c.length() != static_cast<size_t>(r))
        throw domain_error("strong genericity: weight length must equal the rank");
    // All subset averages pairwise distinct.
    size_t n = c.length();
    std::vector<EpsPoly> avg;
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        EpsPoly s(0);
        int count = 0;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1ul << i)) {
                s += c[i];
                ++count;
            }
        avg.push_back(s / Rational(count));
    }
    std::sort(avg.begin(), avg.end());
    return std::adjacent_find(avg.begin(), avg.end()) == avg.end();
}

bool is_close_to_zero(const ParabolicWeight& c, long long r, long long d,
                      const std::vector<long long>& f) {
    if (r <= 0) throw domain_error("close-to-zero: rank must be positive");
    if (f.size() != c.length()) throw domain_error("close-to-zero: flag/weight length mismatch");
    ClassVec full{r, d, f, std::nullopt};
    EpsPoly mu = slope_mu_c(full, c).value();
    const long long l = static_cast<long long>(f.size());
    std::vector<long long> fp(f.size(), 0);
    while (true) {
        size_t i = 0;
        for (; i < fp.size(); ++i) {
            if (fp[i] < f[i]) {
                ++fp[i];
                break;
            }
            fp[i] = 0;
        }
        if (i == fp.size()) break;
        long long rp = std::accumulate(fp.begin(), fp.end(), 0LL);
        if (rp <= 0 || rp >= r) continue;
        // Only degrees with d'/r' within distance l of d/r can cross.
        long long lo = (rp * d) / r - l - 1;
        long long hi = (rp * d) / r + l + 1;
        for (long long dp = lo; dp <= hi; ++dp) {
            Rational plain(dp, rp), top(d, r);
            if (plain == top) continue;
            EpsPoly weighted = slope_mu_c(ClassVec{rp, dp, fp, std::nullopt}, c).value();
            if (plain < top && !(weighted < mu)) return false;
            if (plain > top && !(weighted > mu)) return false;
        }
    }
    return true;
}

long long dim_class(const ClassVec& cls, long long g, long long N) {
    long long dim = cls.r * cls.r * (g - 1) + 1;
    if (cls.v) dim += *cls.v * (cls.r * (N + g - 1) + cls.d - *cls.v);
    if (cls.f) {
        const auto& f = *cls.f;
        for (size_t i = 0; i < f.size(); ++i)
            for (size_t j = i + 1; j < f.size(); ++j) dim += f[i] * f[j];
    }
    return dim;
}

namespace {

void decomps_rec(const std::vector<long long>& remaining, long long r0,
                 std::vector<std::vector<long long>>& current,
                 std::vector<std::vector<std::vector<long long>>>& out) {
    bool done = std::all_of(remaining.begin(), remaining.end(),
                            [](long long x) { return x == 0; });
    if (done) {
        out.push_back(current);
        return;
    }
    // Enumerate non-zero subvectors of `remaining` as the next block,
    // in descending lexicographic order (full block first).
    size_t l = remaining.size();
    std::vector<long long> block = remaining;
    while (true) {
        long long size = std::accumulate(block.begin(), block.end(), 0LL);
        if (size > 0 && size % r0 == 0) {
            std::vector<long long> rest(l);
            for (size_t j = 0; j < l; ++j) rest[j] = remaining[j] - block[j];
            current.push_back(block);
            decomps_rec(rest, r0, current, out);
            current.pop_back();
        }
        size_t i = l;
        bool moved = false;
        while (i-- > 0) {
            if (block[i] > 0) {
                --block[i];
                for (size_t j = i + 1; j < l; ++j) block[j] = remaining[j];
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
}

}  // namespace

std::vector<std::vector<std::vector<long long>>> enumerate_flag_decomps_of(
    const std::vector<long long>& base, long long r0, long long n_min) {
    if (r0 < 1) throw domain_error("flag decompositions: r0 must be >= 1");
    for (long long x : base)
        if (x != 0 && x != 1) throw domain_error("flag decompositions: base must be a 0/1 vector");
    std::vector<std::vector<std::vector<long long>>> out;
    std::vector<std::vector<long long>> current;
    decomps_rec(base, r0, current, out);
    std::erase_if(out, [&](const auto& tuple) {
        return static_cast<long long>(tuple.size()) < n_min;
    });
    return out;
}

std::vector<std::vector<std::vector<long long>>> enumerate_flag_decomps(
    long long r, long long r0, long long n_min) {
    if (r < 1) throw domain_error("flag decompositions: r must be >= 1");
    return enumerate_flag_decomps_of(std::vector<long long>(r, 1), r0, n_min);
}

int coeff_S(const std::vector<ClassVec>& seq, const StabilityPair& pair) {
    const size_t n = seq.size();
    if (n == 0) throw domain_error("S coefficient: empty sequence");
    // Prefix and suffix sums of the classes.
    std::vector<ClassVec> prefix(n), suffix(n);
    prefix[0] = seq[0];
    for (size_t i = 1; i < n; ++i) prefix[i] = prefix[i - 1] + seq[i];
    suffix[n - 1] = seq[n - 1];
    for (size_t i = n - 1; i-- > 0;) suffix[i] = suffix[i + 1] + seq[i];

    int s = 1;
    for (size_t i = 0; i + 1 < n; ++i) {
        SlopeValue ta = pair.tau(seq[i]);
        SlopeValue tb = pair.tau(seq[i + 1]);
        SlopeValue pa = pair.tau_prime(prefix[i]);
        SlopeValue pb = pair.tau_prime(suffix[i + 1]);
        if (ta > tb && pa <= pb) {
            // factor 1
        } else if (ta <= tb && pa > pb) {
            s = -s;
        } else {
            return 0;
        }
    }
    return s;
}

Rational coeff_U(const std::vector<ClassVec>& seq, const StabilityPair& pair) {
    const size_t n = seq.size();
    if (n == 0) throw domain_error("U coefficient: empty sequence");
    ClassVec total = seq[0];
    for (size_t i = 1; i < n; ++i) total = total + seq[i];
    SlopeValue tau_prime_total = pair.tau_prime(total);

    Rational result(0);
    // Compositions 0 = a_0 < ... < a_m = n as bitmasks of cut points.
    for (unsigned long cuts = 0; cuts < (1ul << (n - 1)); ++cuts) {
        std::vector<size_t> a{0};
        for (size_t i = 1; i < n; ++i)
            if (cuts & (1ul << (i - 1))) a.push_back(i);
        a.push_back(n);
        const size_t m = a.size() - 1;

        std::vector<ClassVec> beta(m);
        bool ok = true;
        Rational fact_weight(1);
        for (size_t i = 0; i < m && ok; ++i) {
            beta[i] = seq[a[i]];
            for (size_t j = a[i] + 1; j < a[i + 1]; ++j) beta[i] = beta[i] + seq[j];
            SlopeValue tb = pair.tau(beta[i]);
            for (size_t j = a[i]; j < a[i + 1]; ++j)
                if (!(pair.tau(seq[j]) == tb)) {
                    ok = false;
                    break;
                }
            fact_weight *= Rational::inv_factorial(
                static_cast<long long>(a[i + 1] - a[i]));
        }
        if (!ok) continue;

        for (unsigned long bcuts = 0; bcuts < (1ul << (m - 1)); ++bcuts) {
            std::vector<size_t> b{0};
            for (size_t i = 1; i < m; ++i)
                if (bcuts & (1ul << (i - 1))) b.push_back(i);
            b.push_back(m);
            const size_t l = b.size() - 1;

            bool ok2 = true;
            Rational sprod(1);
            for (size_t i = 0; i < l && ok2; ++i) {
                ClassVec gamma = beta[b[i]];
                for (size_t j = b[i] + 1; j < b[i + 1]; ++j) gamma = gamma + beta[j];
                if (!(pair.tau_prime(gamma) == tau_prime_total)) {
                    ok2 = false;
                    break;
                }
                std::vector<ClassVec> part(beta.begin() + b[i], beta.begin() + b[i + 1]);
                int s = coeff_S(part, pair);
                if (s == 0) {
                    sprod = Rational(0);
                    break;
                }
                sprod *= Rational(s);
            }
            if (!ok2 || sprod.is_zero()) continue;
            Rational sign = (l % 2 == 1) ? Rational(1) : Rational(-1);
            result += sign / Rational(static_cast<long long>(l)) * sprod * fact_weight;
        }
    }
    return result;
}

}  // namespace wallx
