#include "stacklab/hadamard.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stacklab {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

HadamardMatrix::HadamardMatrix(int order, std::vector<std::int8_t> entries)
    : p_(order), entries_(std::move(entries)) {
    require(p_ >= 1, "hadamard: order must be positive");
    require(entries_.size() ==
                static_cast<std::size_t>(p_) * static_cast<std::size_t>(p_),
            "hadamard: entry count must be order^2");
    for (auto e : entries_)
        require(e == 1 || e == -1, "hadamard: entries must be +1 or -1");
}

bool HadamardMatrix::normalized() const {
    for (int r = 0; r < p_; ++r)
        if (at(r, p_ - 1) != 1) return false;
    return true;
}

HadamardMatrix sylvester(int p) {
    require(p >= 1 && (p & (p - 1)) == 0, "sylvester: order must be a power of two");
    std::vector<std::int8_t> m{1};
    for (int size = 1; size < p; size *= 2) {
        int ns = size * 2;
        std::vector<std::int8_t> next(static_cast<std::size_t>(ns) * static_cast<std::size_t>(ns));
        for (int r = 0; r < ns; ++r)
            for (int c = 0; c < ns; ++c) {
                std::int8_t base = m[static_cast<std::size_t>(r % size) * static_cast<std::size_t>(size) +
                                     static_cast<std::size_t>(c % size)];
                bool negate = r >= size && c >= size;
                next[static_cast<std::size_t>(r) * static_cast<std::size_t>(ns) +
                     static_cast<std::size_t>(c)] = negate ? static_cast<std::int8_t>(-base) : base;
            }
        m = std::move(next);
    }
    return HadamardMatrix(p, std::move(m));
}

HadamardMatrix paley(int q) {
    require(q >= 3, "paley: q must be at least 3");
    require(q % 4 == 3, "paley: q = 1 (mod 4) is unsupported, need q = 3 (mod 4)");
    for (int d = 2; d * d <= q; ++d)
        require(q % d != 0, "paley: q must be prime");

    // chi(a) = +1 for nonzero squares mod q, -1 otherwise, 0 for a = 0.
    std::vector<int> chi(static_cast<std::size_t>(q), -1);
    chi[0] = 0;
    for (int x = 1; x < q; ++x)
        chi[static_cast<std::size_t>((x * x) % q)] = 1;

    int p = q + 1;
    std::vector<std::int8_t> m(static_cast<std::size_t>(p) * static_cast<std::size_t>(p));
    auto set = [&](int r, int c, int v) {
        m[static_cast<std::size_t>(r) * static_cast<std::size_t>(p) +
          static_cast<std::size_t>(c)] = static_cast<std::int8_t>(v);
    };
    // Bordered antisymmetric core S plus the identity: H = S + I with
    // S[0][j] = +1, S[i][0] = -1 and S[i][j] = chi(j - i) inside.
    set(0, 0, 1);
    for (int j = 1; j < p; ++j) set(0, j, 1);
    for (int i = 1; i < p; ++i) set(i, 0, -1);
    for (int i = 1; i < p; ++i)
        for (int j = 1; j < p; ++j) {
            if (i == j) {
                set(i, j, 1);
            } else {
                int d = ((j - i) % q + q) % q;
                set(i, j, chi[static_cast<std::size_t>(d)]);
            }
        }
    return HadamardMatrix(p, std::move(m));
}

bool validate_hadamard(const HadamardMatrix& h) {
    int p = h.order();
    if (p == 1) return true;
    if (p % 2 != 0) return false;
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b) {
            int diff = 0;
            for (int c = 0; c < p; ++c)
                if (h.at(a, c) != h.at(b, c)) ++diff;
            if (diff != p / 2) return false;
        }
    return true;
}

HadamardMatrix normalize_last_column(const HadamardMatrix& h,
                                     std::vector<int>* flipped) {
    int p = h.order();
    std::vector<std::int8_t> m(static_cast<std::size_t>(p) * static_cast<std::size_t>(p));
    if (flipped) flipped->clear();
    for (int r = 0; r < p; ++r) {
        bool neg = h.at(r, p - 1) == -1;
        if (neg && flipped) flipped->push_back(r);
        for (int c = 0; c < p; ++c)
            m[static_cast<std::size_t>(r) * static_cast<std::size_t>(p) +
              static_cast<std::size_t>(c)] =
                neg ? static_cast<std::int8_t>(-h.at(r, c)) : h.at(r, c);
    }
    return HadamardMatrix(p, std::move(m));
}

HadamardMatrix reference_order4() {
    std::vector<std::int8_t> m{+1, +1, +1, +1,
                               -1, -1, +1, +1,
                               -1, +1, -1, +1,
                               +1, -1, -1, +1};
    return HadamardMatrix(4, std::move(m));
}

PermutationFamily::PermutationFamily(HadamardMatrix h, int m)
    : source_(std::move(h)), m_(m) {
    require(m_ >= 1, "permutation family: base m must be positive");
    require(validate_hadamard(source_), "permutation family: matrix is not Hadamard");
    require(source_.normalized(),
            "permutation family: matrix must be normalized (last column +1)");
    int p = source_.order();
    n_ = 1;
    for (int a = 0; a < p - 1; ++a) {
        n_ *= m_;
        require(n_ <= (1ll << 40), "permutation family: m^(p-1) too large");
    }
    perms_.assign(static_cast<std::size_t>(p), {});
    inverse_.assign(static_cast<std::size_t>(p), {});
    for (int k = 0; k < p; ++k) {
        auto& perm = perms_[static_cast<std::size_t>(k)];
        auto& inv = inverse_[static_cast<std::size_t>(k)];
        perm.assign(static_cast<std::size_t>(n_), 0);
        inv.assign(static_cast<std::size_t>(n_), 0);
        for (std::int64_t i = 1; i <= n_; ++i) {
            std::int64_t rest = i - 1, value = 0, power = 1;
            for (int a = 0; a < p - 1; ++a) {
                std::int64_t digit = rest % m_;
                rest /= m_;
                if (source_.at(k, a) == -1) digit = m_ - 1 - digit;
                value += digit * power;
                power *= m_;
            }
            perm[static_cast<std::size_t>(i - 1)] = value + 1;
        }
        for (std::int64_t i = 1; i <= n_; ++i) {
            std::int64_t v = perm[static_cast<std::size_t>(i - 1)];
            require(inv[static_cast<std::size_t>(v - 1)] == 0,
                    "permutation family: pi_k is not a bijection");
            inv[static_cast<std::size_t>(v - 1)] = i;
        }
    }
}

std::int64_t PermutationFamily::apply(int k, std::int64_t i) const {
    return perms_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)];
}

std::int64_t PermutationFamily::apply_inverse(int k, std::int64_t value) const {
    return inverse_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(value - 1)];
}

SumSetAnalysis sum_set(const PermutationFamily& f, int k, int ell) {
    require(k != ell, "sum_set: indices must be distinct");
    int p = f.p();
    require(k >= 1 && k <= p && ell >= 1 && ell <= p, "sum_set: index out of range");
    SumSetAnalysis out;
    out.k = k;
    out.ell = ell;
    for (int a = 0; a < p - 1; ++a) {
        if (f.source().at(k - 1, a) == f.source().at(ell - 1, a))
            out.a_plus.push_back(a);
        else
            out.a_minus.push_back(a);
    }
    std::int64_t n = f.n();
    int m = f.m();
    for (std::int64_t i = 1; i <= n; ++i) {
        for (std::int64_t j = std::max<std::int64_t>(1, i - 1);
             j <= std::min<std::int64_t>(n, i + 1); ++j) {
            std::int64_t s = f.apply(k, i) + f.apply(ell, j);
            if (out.values.insert(s).second) {
                // Record the digit sums tau_a(i,j) behind this new sum value.
                std::vector<int> tau(static_cast<std::size_t>(p - 1), 0);
                std::int64_t ri = i - 1, rj = j - 1;
                for (int a = 0; a < p - 1; ++a) {
                    int di = static_cast<int>(ri % m), dj = static_cast<int>(rj % m);
                    ri /= m;
                    rj /= m;
                    int dk = f.source().at(k - 1, a) == -1 ? m - 1 - di : di;
                    int dl = f.source().at(ell - 1, a) == -1 ? m - 1 - dj : dj;
                    tau[static_cast<std::size_t>(a)] = dk + dl;
                }
                out.tau_witnesses.push_back(std::move(tau));
            }
        }
    }
    return out;
}

StackLayout path_layout_under_permutation(const PermutationFamily& f, int k) {
    int p = f.p();
    require(k >= 1 && k <= p, "path layout: index out of range");
    std::int64_t n = f.n();
    int m = f.m();

    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (std::int64_t pos = 1; pos <= n; ++pos)
        order[static_cast<std::size_t>(pos - 1)] =
            static_cast<Vertex>(f.apply_inverse(k, pos));

    // Path edges i(i+1) sorted by i, matching Graph's edge order for path(n).
    std::int32_t stacks = p >= 2 ? 2 * p - 3 : 0;
    std::vector<std::int32_t> page(static_cast<std::size_t>(n - 1), 0);
    for (std::int64_t i = 1; i < n; ++i) {
        std::int32_t s;
        if (m == 1 || i % m != 0) {
            s = 1;
        } else {
            std::int64_t q = i;
            int a = 0;
            while (q % m == 0) {
                q /= m;
                ++a;
            }
            // Edges whose index is divisible by m^a but not m^(a+1) split in
            // two by the parity of q = i / m^a.
            s = static_cast<std::int32_t>(2 * a + (q % 2 == 0 ? 1 : 0));
        }
        page[static_cast<std::size_t>(i - 1)] = s;
    }
    if (n == 1) return StackLayout{VertexOrder(std::move(order)), {}, 0};
    return StackLayout{VertexOrder(std::move(order)), std::move(page), stacks};
}

std::int64_t lcs(const PermutationFamily& f, int k, int ell) {
    const auto& a = f.values(k);
    const auto& b = f.values(ell);
    std::size_t n = a.size();
    std::vector<std::int64_t> prev(n + 1, 0), cur(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            if (a[i - 1] == b[j - 1])
                cur[j] = prev[j - 1] + 1;
            else
                cur[j] = std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[n];
}

std::string hadamard_to_string(const HadamardMatrix& h) {
    std::ostringstream os;
    os << "hadamard " << h.order() << '\n';
    for (int r = 0; r < h.order(); ++r) {
        for (int c = 0; c < h.order(); ++c) os << (h.at(r, c) == 1 ? '+' : '-');
        os << '\n';
    }
    return os.str();
}

HadamardMatrix hadamard_from_string(const std::string& text) {
    std::istringstream is(text);
    std::string tag;
    int p = 0;
    if (!(is >> tag >> p) || tag != "hadamard")
        throw std::runtime_error("parse error: expected 'hadamard <p>' header");
    std::vector<std::int8_t> m;
    m.reserve(static_cast<std::size_t>(p) * static_cast<std::size_t>(p));
    std::string row;
    for (int r = 0; r < p; ++r) {
        if (!(is >> row) || row.size() != static_cast<std::size_t>(p))
            throw std::runtime_error("parse error: bad hadamard row");
        for (char c : row) {
            if (c != '+' && c != '-')
                throw std::runtime_error("parse error: hadamard entries must be + or -");
            m.push_back(c == '+' ? 1 : -1);
        }
    }
    return HadamardMatrix(p, std::move(m));
}

std::string permutation_to_string(const PermutationFamily& f, int k) {
    std::ostringstream os;
    os << "perm " << f.n() << '\n';
    const auto& vals = f.values(k);
    for (std::size_t i = 0; i < vals.size(); ++i)
        os << vals[i] << (i + 1 == vals.size() ? '\n' : ' ');
    return os.str();
}

}  // namespace stacklab
