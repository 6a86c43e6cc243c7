#include "circumlab/vine.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace circumlab {

namespace {

struct EarCand {
    int wpos, zpos;
    std::uint64_t interior = 0;
    std::vector<int> verts; // host-path endpoint first
};

struct HostView {
    const Graph& g;
    const OrientedPath& path;
    int p;
    std::uint64_t path_mask;
    std::vector<int> pos; // vertex -> position, -1 off path

    HostView(const Graph& graph, const OrientedPath& host) : g(graph), path(host) {
        p = path.order();
        path_mask = path.vertex_mask();
        pos.assign(static_cast<std::size_t>(g.order()), -1);
        for (int i = 0; i < p; ++i) pos[static_cast<std::size_t>(path.verts[i])] = i;
    }
};

// Every ear rooted at path position a: direct chords and all simple paths
// through off-path vertices ending at a later path position.
void collect_ears_from(const HostView& h, int a, std::vector<EarCand>& out) {
    const int u = h.path.verts[static_cast<std::size_t>(a)];
    for (std::uint64_t m = h.g.neighbors(u) & h.path_mask; m;) {
        const int w = std::countr_zero(m);
        m &= m - 1;
        if (h.pos[static_cast<std::size_t>(w)] > a)
            out.push_back({a, h.pos[static_cast<std::size_t>(w)], 0, {u, w}});
    }
    const std::uint64_t off = h.g.vertex_mask() & ~h.path_mask;
    if (!off) return;
    std::vector<int> stack{u};
    std::uint64_t used = 0;
    auto dfs = [&](auto&& self, int at) -> void {
        for (std::uint64_t m = h.g.neighbors(at); m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            if (bit(v) & off & ~used) {
                used |= bit(v);
                stack.push_back(v);
                self(self, v);
                stack.pop_back();
                used &= ~bit(v);
            } else if ((bit(v) & h.path_mask) && h.pos[static_cast<std::size_t>(v)] > a &&
                       stack.size() >= 2) {
                EarCand e{a, h.pos[static_cast<std::size_t>(v)], used, stack};
                e.verts.push_back(v);
                out.push_back(std::move(e));
            }
        }
    };
    dfs(dfs, u);
}

std::vector<EarCand> collect_ears(const HostView& h) {
    std::vector<EarCand> out;
    for (int a = 0; a < h.p; ++a) collect_ears_from(h, a, out);
    std::stable_sort(out.begin(), out.end(), [](const EarCand& x, const EarCand& y) {
        if (x.wpos != y.wpos) return x.wpos < y.wpos;
        if (x.zpos != y.zpos) return x.zpos < y.zpos;
        if (x.verts.size() != y.verts.size()) return x.verts.size() < y.verts.size();
        return x.verts < y.verts;
    });
    return out;
}

struct SystemSearch {
    const std::vector<EarCand>& cands;
    int p;
    int target_m;
    std::vector<const EarCand*> chosen;
    std::uint64_t used_interior = 0;

    bool admissible(const EarCand& e) const {
        const int i = static_cast<int>(chosen.size()) + 1; // 1-based ear index
        if (e.interior & used_interior) return false;
        if (i == 1) {
            if (e.wpos != 0) return false;
        } else if (i == 2) {
            if (e.wpos <= 0) return false;                  // w_1 < w_2
            if (e.wpos >= chosen[0]->zpos) return false;    // w_2 < z_1
        } else {
            if (e.wpos < chosen[static_cast<std::size_t>(i - 3)]->zpos) return false; // z_{i-2} <= w_i
            if (e.wpos >= chosen[static_cast<std::size_t>(i - 2)]->zpos) return false; // w_i < z_{i-1}
        }
        if (i == target_m) {
            if (e.zpos != p - 1) return false;
            if (i >= 2 && chosen[static_cast<std::size_t>(i - 2)]->zpos >= p - 1)
                return false; // z_{m-1} < z_m
        } else {
            if (e.zpos >= p - 1) return false; // earlier z's strictly increase to z_m
        }
        return true;
    }

    bool search() {
        if (static_cast<int>(chosen.size()) == target_m) return true;
        for (const EarCand& e : cands) {
            if (!admissible(e)) continue;
            chosen.push_back(&e);
            used_interior |= e.interior;
            if (search()) return true;
            used_interior &= ~e.interior;
            chosen.pop_back();
        }
        return false;
    }
};

Vine to_vine(const std::vector<const EarCand*>& chosen) {
    Vine v;
    for (const EarCand* e : chosen) v.ears.push_back(VineEar{e->verts});
    return v;
}

void annotate_claims(const Graph& g, const OrientedPath& path, Vine& vine) {
    const HostView h(g, path);
    const int v1 = path.front(), vp = path.back();
    const std::uint64_t endpoints_nbrs = g.neighbors(v1) | g.neighbors(vp);
    Vine::Claims& c = vine.claims;
    c.checked = (endpoints_nbrs & ~h.path_mask) == 0;
    if (!c.checked) return;

    const int m = vine.length();
    c.first_ear_edge = vine.ears.front().is_edge();
    c.last_ear_edge = vine.ears.back().is_edge();
    if (!c.first_ear_edge || !c.last_ear_edge)
        fail(errc::construction_invalid,
             "outer vine ear has interior vertices although the host path is longest");

    auto pos_of = [&](int v) { return h.pos[static_cast<std::size_t>(v)]; };
    int xt_pos = -1;
    for (std::uint64_t m2 = g.neighbors(v1); m2;) {
        const int v = std::countr_zero(m2);
        m2 &= m2 - 1;
        xt_pos = std::max(xt_pos, pos_of(v));
    }
    int yf_pos = h.p;
    for (std::uint64_t m2 = g.neighbors(vp); m2;) {
        const int v = std::countr_zero(m2);
        m2 &= m2 - 1;
        yf_pos = std::min(yf_pos, pos_of(v));
    }

    auto required = [&](bool ok, const char* what) {
        if (!ok)
            fail(errc::construction_invalid,
                 std::string("minimal vine violates spacing fact: ") + what);
    };
    if (m >= 2) {
        const int z2_pos = pos_of(vine.ears[1].z());
        c.xt_before_z2 = xt_pos < z2_pos;
        required(*c.xt_before_z2, "x_t < z_2");
        const int wm1_pos = pos_of(vine.ears[static_cast<std::size_t>(m - 2)].w());
        c.wm1_before_yf = wm1_pos < yf_pos;
        required(*c.wm1_before_yf, "w_{m-1} < y_f");
    }
    if (m >= 3) {
        const int w3_pos = pos_of(vine.ears[2].w());
        c.xt_at_or_before_w3 = xt_pos <= w3_pos;
        c.xt_strictly_before_w3 = xt_pos < w3_pos;
        required(*c.xt_at_or_before_w3, "x_t <= w_3");
        const int zm2_pos = pos_of(vine.ears[static_cast<std::size_t>(m - 3)].z());
        c.zm2_at_or_before_yf = zm2_pos <= yf_pos;
        c.zm2_strictly_before_yf = zm2_pos < yf_pos;
        required(*c.zm2_at_or_before_yf, "z_{m-2} <= y_f");
    }
}

} // namespace

void check_vine(const Graph& g, const OrientedPath& path, const Vine& vine) {
    const HostView h(g, path);
    if (vine.length() < 1) fail(errc::construction_invalid, "vine has no ears");
    std::uint64_t interiors = 0;
    for (int i = 0; i < vine.length(); ++i) {
        const VineEar& e = vine.ears[static_cast<std::size_t>(i)];
        if (e.verts.size() < 2 || !is_path_in(g, e.verts))
            fail(errc::construction_invalid, "ear " + std::to_string(i + 1) + " is not a path");
        if (h.pos[static_cast<std::size_t>(e.w())] < 0 || h.pos[static_cast<std::size_t>(e.z())] < 0)
            fail(errc::construction_invalid, "ear endpoint off the host path");
        for (std::size_t k = 1; k + 1 < e.verts.size(); ++k) {
            const int v = e.verts[k];
            if (bit(v) & h.path_mask)
                fail(errc::construction_invalid, "ear interior vertex lies on the host path");
            if (bit(v) & interiors)
                fail(errc::construction_invalid, "ears share an interior vertex");
            interiors |= bit(v);
        }
    }
    // endpoint interleaving: w1 < w2 < z1 <= w3 < z2 <= ... <= wm < z_{m-1} < zm
    const int m = vine.length();
    auto wp = [&](int i) { return h.pos[static_cast<std::size_t>(vine.ears[static_cast<std::size_t>(i - 1)].w())]; };
    auto zp = [&](int i) { return h.pos[static_cast<std::size_t>(vine.ears[static_cast<std::size_t>(i - 1)].z())]; };
    auto need = [&](bool ok, const std::string& what) {
        if (!ok) fail(errc::construction_invalid, "vine interleaving violated: " + what);
    };
    need(wp(1) == 0, "w_1 = v_1");
    need(zp(m) == h.p - 1, "z_m = v_p");
    if (m >= 2) {
        need(wp(1) < wp(2), "w_1 < w_2");
        need(zp(m - 1) < zp(m), "z_{m-1} < z_m");
        for (int i = 2; i <= m; ++i) need(wp(i) < zp(i - 1), "w_i < z_{i-1}");
        for (int i = 3; i <= m; ++i) need(zp(i - 2) <= wp(i), "z_{i-2} <= w_i");
    } else {
        need(wp(1) < zp(1), "w_1 < z_1");
    }
}

std::optional<Vine> find_vine_of_length(const Graph& g, const OrientedPath& path, int m) {
    if (path.order() < 2 || m < 1) return std::nullopt;
    const HostView h(g, path);
    const std::vector<EarCand> cands = collect_ears(h);
    SystemSearch s{cands, h.p, m};
    if (!s.search()) return std::nullopt;
    Vine v = to_vine(s.chosen);
    check_vine(g, path, v);
    return v;
}

Vine find_minimal_vine(const Graph& g, const OrientedPath& path) {
    if (path.order() < 2)
        fail(errc::invalid_argument, "vine host path needs at least two vertices");
    const HostView h(g, path);
    const std::vector<EarCand> cands = collect_ears(h);
    for (int m = 1; m < h.p; ++m) {
        SystemSearch s{cands, h.p, m};
        if (!s.search()) continue;
        Vine v = to_vine(s.chosen);
        check_vine(g, path, v);
        annotate_claims(g, path, v);
        return v;
    }
    fail(errc::no_vine_found,
         "no ear system satisfies the vine conditions on this path (expected when the host "
         "graph is not 2-connected)");
}

} // namespace circumlab
