#include "pmk/oracle.hpp"

#include "pmk/bridge.hpp"

#include <algorithm>

namespace pmk {

bool KripkeFrame::serial() const {
    for (int w = 0; w < n; ++w)
        if (rows[w] == 0) return false;
    return true;
}

bool KripkeFrame::reflexive() const {
    for (int w = 0; w < n; ++w)
        if (!(rows[w] & (WorldSet{1} << w))) return false;
    return true;
}

bool KripkeFrame::transitive() const {
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (rows[u] & (WorldSet{1} << v))
                if ((rows[v] & ~rows[u]) != 0) return false;
    return true;
}

bool KripkeFrame::symmetric() const {
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if ((rows[u] >> v & 1) != (rows[v] >> u & 1)) return false;
    return true;
}

bool KripkeFrame::euclidean() const {
    // uRv and uRw imply vRw
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (rows[u] & (WorldSet{1} << v))
                if ((rows[u] & ~rows[v]) != 0) return false;
    return true;
}

bool KripkeFrame::in_class(const FrameClass& c) const {
    if (c.serial && !serial()) return false;
    if (c.reflexive && !reflexive()) return false;
    if (c.transitive && !transitive()) return false;
    if (c.symmetric && !symmetric()) return false;
    if (c.euclidean && !euclidean()) return false;
    return true;
}

WorldSet Valuation::get(const std::string& atom) const {
    for (const auto& [name, set] : sets)
        if (name == atom) return set;
    throw OracleError("valuation does not cover atom: " + atom);
}

WorldSet eval(const Formula& f, const KripkeFrame& frame, const Valuation& val) {
    switch (f.kind()) {
    case FormulaKind::Atom: return val.get(f.name()) & frame.all();
    case FormulaKind::Top: return frame.all();
    case FormulaKind::Not: return frame.all() & ~eval(f.left(), frame, val);
    case FormulaKind::And: return eval(f.left(), frame, val) & eval(f.right(), frame, val);
    case FormulaKind::Box: {
        WorldSet inner = eval(f.left(), frame, val);
        WorldSet out = 0;
        for (int w = 0; w < frame.n; ++w)
            if ((frame.rows[w] & ~inner) == 0) out |= WorldSet{1} << w;
        return out;
    }
    }
    return 0;
}

namespace {

template <typename Fn>
bool sweep_valuations(const std::vector<std::string>& atoms, const KripkeFrame& frame,
                      const OracleLimits& lim, Fn&& per_valuation) {
    if (atoms.size() > lim.max_atoms)
        throw OracleError("atom count exceeds the exhaustive valuation cap");
    std::size_t per_atom = std::size_t{1} << frame.n;
    std::vector<std::size_t> idx(atoms.size(), 0);
    for (;;) {
        Valuation v;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            v.sets.emplace_back(atoms[i], static_cast<WorldSet>(idx[i]));
        if (!per_valuation(v)) return false;
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == per_atom) idx[k++] = 0;
        if (k == idx.size()) return true;
    }
}

} // namespace

bool valid(const Formula& f, const KripkeFrame& frame, const OracleLimits& lim) {
    return sweep_valuations(f.atoms(), frame, lim, [&](const Valuation& v) {
        return eval(f, frame, v) == frame.all();
    });
}

bool valid(const Sequent& s, const KripkeFrame& frame, const OracleLimits& lim) {
    std::vector<std::string> atoms = Formula::conj(s.left, s.right).atoms();
    return sweep_valuations(atoms, frame, lim, [&](const Valuation& v) {
        return (eval(s.left, frame, v) & ~eval(s.right, frame, v)) == 0;
    });
}

bool valid(const Graph& g, const KripkeFrame& frame, const OracleLimits& lim) {
    return valid(pi(g), frame, lim);
}

std::vector<KripkeFrame> generate_frames(int n, const FrameClass& c) {
    if (n < 1) throw OracleError("frame needs at least one world");
    std::vector<KripkeFrame> out;
    if (n <= 4) {
        std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
        for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
            KripkeFrame f;
            f.n = n;
            f.rows.assign(static_cast<std::size_t>(n), 0);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (mask >> (u * n + v) & 1)
                        f.rows[static_cast<std::size_t>(u)] |= WorldSet{1} << v;
            if (f.in_class(c)) out.push_back(std::move(f));
        }
        return out;
    }
    std::mt19937_64 rng(0xC0FFEE ^ static_cast<std::uint64_t>(n));
    for (int i = 0; i < 4096; ++i) out.push_back(random_frame(n, c, rng));
    return out;
}

KripkeFrame random_frame(int n, const FrameClass& c, std::mt19937_64& rng) {
    if (n < 1 || n > 30) throw OracleError("unsupported world count");
    for (;;) {
        KripkeFrame f;
        f.n = n;
        f.rows.assign(static_cast<std::size_t>(n), 0);
        for (int u = 0; u < n; ++u)
            f.rows[static_cast<std::size_t>(u)] =
                static_cast<WorldSet>(rng()) & f.all();
        // Repair toward the class instead of pure rejection: close under the
        // required properties, then verify.
        if (c.reflexive)
            for (int u = 0; u < n; ++u) f.rows[static_cast<std::size_t>(u)] |= WorldSet{1} << u;
        if (c.symmetric)
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (f.rows[static_cast<std::size_t>(u)] >> v & 1)
                        f.rows[static_cast<std::size_t>(v)] |= WorldSet{1} << u;
        if (c.transitive || c.euclidean) {
            bool changed = true;
            while (changed) {
                changed = false;
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v)
                        if (f.rows[static_cast<std::size_t>(u)] >> v & 1) {
                            if (c.transitive) {
                                WorldSet m = f.rows[static_cast<std::size_t>(v)] &
                                             ~f.rows[static_cast<std::size_t>(u)];
                                if (m) { f.rows[static_cast<std::size_t>(u)] |= m; changed = true; }
                            }
                            if (c.euclidean) {
                                WorldSet m = f.rows[static_cast<std::size_t>(u)] &
                                             ~f.rows[static_cast<std::size_t>(v)];
                                if (m) { f.rows[static_cast<std::size_t>(v)] |= m; changed = true; }
                            }
                        }
            }
        }
        if (c.serial)
            for (int u = 0; u < n; ++u)
                if (f.rows[static_cast<std::size_t>(u)] == 0)
                    f.rows[static_cast<std::size_t>(u)] = WorldSet{1} << u;
        if (f.in_class(c)) return f;
    }
}

namespace {

template <typename T>
std::optional<Countermodel> search(const T& x, const FrameClass& c, int max_n,
                                   const OracleLimits& lim,
                                   const std::vector<std::string>& atoms) {
    if (max_n < 1) throw OracleError("countermodel search needs max_n >= 1");
    for (int n = 1; n <= max_n; ++n) {
        for (const KripkeFrame& frame : generate_frames(n, c)) {
            std::optional<Countermodel> found;
            sweep_valuations(atoms, frame, lim, [&](const Valuation& v) {
                WorldSet bad;
                if constexpr (std::is_same_v<T, Sequent>)
                    bad = eval(x.left, frame, v) & ~eval(x.right, frame, v);
                else
                    bad = frame.all() & ~eval(x, frame, v);
                if (bad) {
                    int w = 0;
                    while (!(bad >> w & 1)) ++w;
                    found = Countermodel{frame, v, w};
                    return false;
                }
                return true;
            });
            if (found) {
                // Self-verifying witness.
                WorldSet check;
                if constexpr (std::is_same_v<T, Sequent>)
                    check = eval(x.left, found->frame, found->val) &
                            ~eval(x.right, found->frame, found->val);
                else
                    check = found->frame.all() & ~eval(x, found->frame, found->val);
                if (!(check >> found->world & 1))
                    throw OracleError("countermodel failed re-verification");
                return found;
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<Countermodel> countermodel(const Formula& f, const FrameClass& c, int max_n,
                                         const OracleLimits& lim) {
    return search(f, c, max_n, lim, f.atoms());
}

std::optional<Countermodel> countermodel(const Sequent& s, const FrameClass& c, int max_n,
                                         const OracleLimits& lim) {
    return search(s, c, max_n, lim, Formula::conj(s.left, s.right).atoms());
}

std::optional<Countermodel> countermodel(const Graph& g, const FrameClass& c, int max_n,
                                         const OracleLimits& lim) {
    return countermodel(pi(g), c, max_n, lim);
}

} // namespace pmk
