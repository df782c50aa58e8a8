#include "sl3/suites.hpp"
#include "sl3/catalog.hpp"
#include "sl3/ends.hpp"
#include "sl3/error.hpp"

#include <functional>
#include <map>

namespace sl3 {

namespace {

using Map = std::function<TropicalPoint(const TropicalPoint&)>;

std::string coweight_text(const Coweight& c) { return "(" + to_string(c.c1) + ", " + to_string(c.c2) + ")"; }

Check make_check(std::string name, bool pass, std::string detail = {}) {
    Check c;
    c.name = std::move(name);
    c.pass = pass;
    c.detail = std::move(detail);
    return c;
}

Check skipped(std::string name, std::string why) {
    Check c;
    c.name = std::move(name);
    c.skipped = true;
    c.detail = std::move(why);
    return c;
}

// Compares two maps on every sample, keeping the first disagreement as witness.
Check sweep(std::string name, const std::vector<TropicalPoint>& samples, const Map& f, const Map& g,
            const std::vector<Vertex>* only = nullptr) {
    Check c = make_check(std::move(name), true, std::to_string(samples.size()) + " points");
    for (const auto& x : samples) {
        const auto a = f(x), b = g(x);
        const bool same = only ? equal_on(a, b, *only) : a == b;
        if (!same) {
            c.pass = false;
            c.witness = json{{"point", to_json(x)}, {"lhs", to_json(a)}, {"rhs", to_json(b)}};
            break;
        }
    }
    return c;
}

Check sweep_pred(std::string name, const std::vector<TropicalPoint>& samples,
                 const std::function<bool(const TropicalPoint&)>& pred) {
    Check c = make_check(std::move(name), true, std::to_string(samples.size()) + " points");
    for (const auto& x : samples)
        if (!pred(x)) {
            c.pass = false;
            c.witness = json{{"point", to_json(x)}};
            break;
        }
    return c;
}

std::vector<Triangulation> surfaces_of(const SuiteOptions& o) {
    if (!o.surfaces.empty()) return o.surfaces;
    return {dstar_triangulation()};
}

std::string label(const Triangulation& tri) { return tri.name.empty() ? std::string("surface") : tri.name; }

std::string chart_label(const PunctureChart& ch) { return label(ch.tri) + ":" + ch.tri.points[ch.puncture].id; }

std::vector<Vertex> unfrozen_of(const Quiver& q) { return q.seed.unfrozen(); }

// Sign patterns over all unfrozen vertices when there are few, otherwise over each chart's labels 1..6.
std::vector<TropicalPoint> surface_samples(const Triangulation& tri, const Quiver& q, Flavor f, const SuiteOptions& o) {
    const auto uf = unfrozen_of(q);
    if (uf.size() <= 8) return role_samples(q.seed.size(), uf, f, o.random_points, o.rng_seed);
    std::vector<TropicalPoint> out;
    for (const auto& ch : puncture_charts(tri)) {
        auto part = role_samples(q.seed.size(), {ch.v(1), ch.v(2), ch.v(3), ch.v(4), ch.v(5), ch.v(6)}, f, 0, 0);
        out.insert(out.end(), part.begin(), part.end());
    }
    auto rnd = role_samples(q.seed.size(), {}, f, o.random_points, o.rng_seed);
    out.insert(out.end(), rnd.begin() + 1, rnd.end());  // drop the lone zero vector
    return out;
}

SuiteReport casimir_table(const SuiteOptions&) {
    SuiteReport r{"casimir-table", "tropical Casimir formula on the elementary braids", {}};
    const auto& ch = dstar_chart();
    const auto& cat = catalog();
    r.checks.push_back(make_check("catalog has eleven entries", cat.size() == 11, std::to_string(cat.size())));
    for (const auto& e : cat) {
        const auto rev = orientation_reverse(e);
        const auto rot = pi_rotation(e);
        const auto t0 = casimir(to_point(e), ch), t1 = casimir(to_point(rev), ch), t2 = casimir(to_point(rot), ch);
        r.checks.push_back(make_check(e.name + " (" + e.figure_ref + ")", t0 == e.theta, coweight_text(t0)));
        r.checks.push_back(make_check(rev.name + " reversal", t1 == rev.theta && rev.theta == dynkin_star(e.theta),
                                      coweight_text(t1)));
        r.checks.push_back(make_check(rot.name + " rotation", t2 == rot.theta && rot.theta == e.theta, coweight_text(t2)));
        r.checks.push_back(make_check(e.name + " reversal is involutive", orientation_reverse(rev).coords == e.coords));
        r.checks.push_back(make_check(e.name + " rotation is involutive", pi_rotation(rot).coords == e.coords));
    }
    const auto img = unfrozen_coords(weyl_pl_r2(to_point(cat.at(2)), ch));
    r.checks.push_back(make_check("r2 sends braid_03 to braid_08", img == cat.at(7).coords));
    return r;
}

SuiteReport weyl_relations(const SuiteOptions& o) {
    SuiteReport r{"weyl-relations", "Weyl group relations at punctures", {}};
    for (const auto& tri : surfaces_of(o)) {
        const auto charts = puncture_charts(tri);
        if (charts.empty()) {
            r.checks.push_back(skipped(label(tri) + ": relations", "no puncture with a two-triangle star"));
            continue;
        }
        for (const auto& ch : charts) {
            const auto xs = chart_samples(ch, Flavor::X, o.random_points, o.rng_seed);
            const std::string n = chart_label(ch);
            Map id = [](const TropicalPoint& x) { return x; };
            Map r1 = [&](const TropicalPoint& x) { return weyl_pl_r1(x, ch); };
            Map r2 = [&](const TropicalPoint& x) { return weyl_pl_r2(x, ch); };
            r.checks.push_back(sweep(n + ": r1^2 = id", xs, [&](const TropicalPoint& x) { return r1(r1(x)); }, id));
            r.checks.push_back(sweep(n + ": r2^2 = id", xs, [&](const TropicalPoint& x) { return r2(r2(x)); }, id));
            r.checks.push_back(sweep(n + ": r1 r2 r1 = r2 r1 r2", xs, [&](const TropicalPoint& x) { return r1(r2(r1(x))); },
                                     [&](const TropicalPoint& x) { return r2(r1(r2(x))); }));
            for (int s : {1, 2})
                r.checks.push_back(sweep_pred(n + ": casimir r" + std::to_string(s) + " = reflect casimir", xs,
                                              [&](const TropicalPoint& x) {
                                                  return casimir(weyl_pl(s, x, ch), ch) == reflect(s, casimir(x, ch));
                                              }));
        }
        for (std::size_t a = 0; a < charts.size(); ++a)
            for (std::size_t b = a + 1; b < charts.size(); ++b) {
                const auto& p = charts[a];
                const auto& q = charts[b];
                // sign patterns on each chart separately and on both at once, label by label
                auto xs = chart_samples(p, Flavor::X, o.random_points, o.rng_seed);
                auto more = chart_samples(q, Flavor::X, 0, 0);
                xs.insert(xs.end(), more.begin(), more.end());
                for (const auto& y : chart_samples(p, Flavor::X, 0, 0)) {
                    TropicalPoint z = y;
                    for (int l = 1; l <= 6; ++l) z[q.v(l)] = y[p.v(l)];
                    xs.push_back(z);
                }
                for (int s : {1, 2})
                    for (int t : {1, 2})
                        r.checks.push_back(sweep(chart_label(p) + " r" + std::to_string(s) + " commutes with " +
                                                     chart_label(q) + " r" + std::to_string(t),
                                                 xs, [&](const TropicalPoint& x) { return weyl_pl(s, weyl_pl(t, x, q), p); },
                                                 [&](const TropicalPoint& x) { return weyl_pl(t, weyl_pl(s, x, p), q); }));
            }
    }
    return r;
}

SuiteReport weyl_loop_vs_pl(const SuiteOptions& o) {
    SuiteReport r{"weyl-loop-vs-pl", "mutation loops against the closed-form Weyl action", {}};
    for (const auto& tri : surfaces_of(o)) {
        const auto charts = puncture_charts(tri);
        if (charts.empty()) r.checks.push_back(skipped(label(tri) + ": loops", "no puncture with a two-triangle star"));
        for (const auto& ch : charts) {
            const auto xs = chart_samples(ch, Flavor::X, o.random_points, o.rng_seed);
            const std::string n = chart_label(ch);
            for (int s : {1, 2}) {
                const auto loops = weyl_loop(s, ch);
                const CompiledPath prim(ch.seed(), loops.primary), alt(ch.seed(), loops.alternative);
                const std::string rs = "r" + std::to_string(s);
                r.checks.push_back(make_check(n + ": " + rs + " loop returns to the seed", prim.end() == ch.seed()));
                r.checks.push_back(make_check(n + ": " + rs + " alternative loop returns to the seed", alt.end() == ch.seed()));
                Map pl = [&](const TropicalPoint& x) { return weyl_pl(s, x, ch); };
                r.checks.push_back(sweep(n + ": " + rs + " loop = closed form", xs,
                                         [&](const TropicalPoint& x) { return prim.apply(x); }, pl));
                r.checks.push_back(sweep(n + ": " + rs + " alternative loop = closed form", xs,
                                         [&](const TropicalPoint& x) { return alt.apply(x); }, pl));
                int v = 0;
                for (const auto& path : weyl_loop_variants(s, ch)) {
                    const CompiledPath var(ch.seed(), path);
                    ++v;
                    r.checks.push_back(sweep(n + ": " + rs + " reordered loop " + std::to_string(v), xs,
                                             [&](const TropicalPoint& x) { return var.apply(x); }, pl));
                }
            }
        }
    }
    return r;
}

SuiteReport exact_sequence(const SuiteOptions& o) {
    SuiteReport r{"exact-sequence", "cluster exact sequence for tropical points", {}};
    for (const auto& tri : surfaces_of(o)) {
        const std::string n = label(tri);
        const auto rep = verify_exact_sequence(tri);
        r.checks.push_back(make_check(n + ": kernel rank = 2 * punctures", rep.ker_rank == rep.expected_ker,
                                      std::to_string(rep.ker_rank) + " vs " + std::to_string(rep.expected_ker)));
        r.checks.push_back(make_check(n + ": annihilator rank = 2 * marked points", rep.ann_rank == rep.expected_ann,
                                      std::to_string(rep.ann_rank) + " vs " + std::to_string(rep.expected_ann)));
        r.checks.push_back(make_check(n + ": peripheral vectors lie in the kernel", rep.basis_in_kernel));
        r.checks.push_back(make_check(n + ": peripheral vectors are independent", rep.basis_independent));
        r.checks.push_back(make_check(n + ": coroot vectors annihilate unfrozen rows", rep.coroots_annihilate));
        r.checks.push_back(make_check(n + ": coroot vectors are independent", rep.coroots_independent));
        r.checks.push_back(make_check(n + ": local chart vectors agree", rep.chart_vectors_agree));
        const auto q = build_quiver(tri);
        auto as = role_samples(q.seed.size(), {}, Flavor::A, o.random_points, o.rng_seed);
        for (Vertex j = 0; j < q.seed.size(); ++j) as.push_back(TropicalPoint::basis(Flavor::A, q.seed.size(), j));
        for (std::size_t m = 0; m < tri.points.size(); ++m) {
            if (tri.points[m].kind != PointKind::Puncture) continue;
            r.checks.push_back(sweep_pred(n + ": casimir at " + tri.points[m].id + " kills the ensemble image", as,
                                          [&](const TropicalPoint& a) {
                                              return casimir_at(ensemble_tropical(a, q.seed), tri, q.layout,
                                                                static_cast<int>(m)) == Coweight{};
                                          }));
        }
    }
    return r;
}

SuiteReport flip_consistency(const SuiteOptions& o) {
    SuiteReport r{"flip-consistency", "mutation sequences realizing a flip", {}};
    for (const auto& tri : surfaces_of(o)) {
        const auto q = build_quiver(tri);
        bool any = false;
        for (std::size_t e = 0; e < tri.edges.size(); ++e) {
            if (tri.edges[e].kind != EdgeKind::Interior) continue;
            any = true;
            const std::string n = label(tri) + ": flip " + tri.edges[e].id;
            FlipResult f;
            try {
                f = flip(tri, static_cast<int>(e));
            } catch (const Error& err) {
                r.checks.push_back(skipped(n, err.what()));
                continue;
            }
            const auto rebuilt = build_quiver(f.flipped).seed;
            const auto upper = apply_path(q.seed, f.full_path());
            MutationPath lower = f.lower_path;
            lower.push_back(MutationStep::permute(f.relabeling));
            const auto lower_seed = apply_path(q.seed, lower);
            r.checks.push_back(make_check(n + ": upper route rebuilds the flipped quiver", upper == rebuilt));
            r.checks.push_back(make_check(n + ": lower route rebuilds the flipped quiver", lower_seed == rebuilt));
            std::vector<Vertex> touched;
            for (const auto& s : f.path) touched.push_back(s.k);
            const auto xs = role_samples(q.seed.size(), touched, Flavor::X, o.random_points, o.rng_seed);
            const CompiledPath up(q.seed, f.full_path()), low(q.seed, lower);
            r.checks.push_back(sweep(n + ": upper and lower routes agree on X-points", xs,
                                     [&](const TropicalPoint& x) { return up.apply(x); },
                                     [&](const TropicalPoint& x) { return low.apply(x); }));
            FlipResult back;
            try {
                back = flip(f.flipped, static_cast<int>(e));
            } catch (const Error& err) {
                r.checks.push_back(make_check(n + ": flip back", false, err.what()));
                continue;
            }
            const auto pi = match_layouts(tri, back.flipped);
            if (!pi) {
                r.checks.push_back(make_check(n + ": flip back returns the triangulation", false));
                continue;
            }
            const auto twice = apply_path(upper, back.full_path());
            r.checks.push_back(make_check(n + ": flip twice is a relabeling of the seed", twice == permute_seed(q.seed, *pi)));
            const CompiledPath there(rebuilt, back.full_path());
            r.checks.push_back(sweep(n + ": flip twice is a relabeling on X-points", xs,
                                     [&](const TropicalPoint& x) { return there.apply(up.apply(x)); },
                                     [&](const TropicalPoint& x) { return permute_point(x, *pi); }));
        }
        if (!any) r.checks.push_back(skipped(label(tri) + ": flips", "no interior edges"));
    }
    return r;
}

SuiteReport dynkin_suite(const SuiteOptions& o) {
    SuiteReport r{"dynkin", "Dynkin involution on tropical X-points", {}};
    for (const auto& tri : surfaces_of(o)) {
        const auto q = build_quiver(tri);
        const auto xs = surface_samples(tri, q, Flavor::X, o);
        Map d = [&](const TropicalPoint& x) { return dynkin_pl(x, tri, q.layout); };
        Map id = [](const TropicalPoint& x) { return x; };
        r.checks.push_back(sweep(label(tri) + ": involutive", xs, [&](const TropicalPoint& x) { return d(d(x)); }, id));
        for (std::size_t m = 0; m < tri.points.size(); ++m) {
            if (tri.points[m].kind != PointKind::Puncture) continue;
            const int p = static_cast<int>(m);
            r.checks.push_back(sweep_pred(label(tri) + ": casimir at " + tri.points[m].id + " is Dynkin-compatible", xs,
                                          [&](const TropicalPoint& x) {
                                              return casimir_at(d(x), tri, q.layout, p) ==
                                                     dynkin_star(casimir_at(x, tri, q.layout, p));
                                          }));
        }
        for (const auto& ch : puncture_charts(tri)) {
            const CompiledPath l1(ch.seed(), weyl_loop(1, ch).primary), l2(ch.seed(), weyl_loop(2, ch).primary);
            const auto cs = chart_samples(ch, Flavor::X, o.random_points, o.rng_seed);
            r.checks.push_back(sweep(chart_label(ch) + ": Dynkin conjugates the r2 loop into the r1 loop", cs,
                                     [&](const TropicalPoint& x) { return d(l2.apply(d(x))); },
                                     [&](const TropicalPoint& x) { return l1.apply(x); }));
        }
    }
    return r;
}

SuiteReport a_side(const SuiteOptions& o) {
    SuiteReport r{"a-side", "Weyl action on tropical A-points", {}};
    for (const auto& tri : surfaces_of(o)) {
        for (const auto& ch : puncture_charts(tri)) {
            const std::string n = chart_label(ch);
            std::vector<Vertex> roles;
            for (int l = 1; l <= 10; ++l) roles.push_back(ch.v(l));
            const auto as = role_samples(ch.size(), roles, Flavor::A, o.random_points, o.rng_seed);
            for (int s : {1, 2}) {
                const auto loops = weyl_loop(s, ch);
                const CompiledPath prim(ch.seed(), loops.primary), alt(ch.seed(), loops.alternative);
                const std::string rs = "r" + std::to_string(s);
                Map rule = [&](const TropicalPoint& a) { return weyl_a_action(a, ch, s); };
                r.checks.push_back(sweep(n + ": " + rs + " A-loop = shift by u", as,
                                         [&](const TropicalPoint& a) { return prim.apply(a); }, rule));
                r.checks.push_back(sweep(n + ": " + rs + " alternative A-loop = shift by u", as,
                                         [&](const TropicalPoint& a) { return alt.apply(a); }, rule));
                r.checks.push_back(sweep(n + ": " + rs + " shift is involutive", as,
                                         [&](const TropicalPoint& a) { return rule(rule(a)); },
                                         [](const TropicalPoint& a) { return a; }));
                const CompiledPath xloop(ch.seed(), loops.primary);
                r.checks.push_back(sweep(n + ": " + rs + " ensemble map intertwines the loops", as,
                                         [&](const TropicalPoint& a) { return ensemble_tropical(prim.apply(a), ch.seed()); },
                                         [&](const TropicalPoint& a) { return xloop.apply(ensemble_tropical(a, ch.seed())); }));
            }
            // peripheral A-vector of the counter-clockwise loop W_p(1,0)
            auto a = TropicalPoint::zero(Flavor::A, ch.size());
            for (int l : {1, 2}) a[ch.v(l)] = Rational(1, 3);
            for (int l : {3, 4, 5, 6}) a[ch.v(l)] = Rational(2, 3);
            const Rational u1 = potential_u(a, ch, 1), u2 = potential_u(a, ch, 2);
            const auto b = weyl_a_action(a, ch, 1);
            const Rational v1 = potential_u(b, ch, 1), v2 = potential_u(b, ch, 2);
            r.checks.push_back(make_check(n + ": peripheral vector has (u1,u2) = (1,0)", u1 == 1 && u2 == 0,
                                          "(" + to_string(u1) + ", " + to_string(u2) + ")"));
            r.checks.push_back(make_check(n + ": r1 sends (u1,u2) to (-1,1)", v1 == -1 && v2 == 1,
                                          "(" + to_string(v1) + ", " + to_string(v2) + ")"));
            bool shifted = true;
            for (int l : {3, 4, 5, 6}) shifted &= b[ch.v(l)] == Rational(-1, 3);
            r.checks.push_back(make_check(n + ": r1 lowers a3..a6 to -1/3", shifted));
            r.checks.push_back(make_check(n + ": the peripheral vector is fixed by mu1",
                                          mutate_a_tropical(a, ch.seed(), ch.v(1)) == a));
            r.checks.push_back(make_check(n + ": the peripheral vector lies in the ensemble kernel",
                                          ensemble_tropical(a, ch.seed()) == TropicalPoint::zero(Flavor::X, ch.size())));
        }
    }
    if (r.checks.empty()) r.checks.push_back(skipped("A-side", "no puncture with a two-triangle star"));
    return r;
}

SuiteReport end_calculus(const SuiteOptions&) {
    SuiteReport r{"end-calculus", "local rules for the Weyl action on signed ends", {}};
    const auto all = all_multisets(4);
    auto exhaustive = [&](const std::string& name, const std::function<bool(const EndMultiset&)>& pred) {
        Check c = make_check(name, true, std::to_string(all.size()) + " multisets");
        for (const auto& m : all)
            if (!pred(m)) {
                c.pass = false;
                c.witness = json{{"multiset", to_string(m)}};
                break;
            }
        r.checks.push_back(c);
    };
    for (int s : {1, 2}) {
        const std::string rs = "r" + std::to_string(s);
        exhaustive(rs + " is theta-equivariant", [&](const EndMultiset& m) { return theta(weyl_act(s, m)) == reflect(s, theta(m)); });
        exhaustive(rs + " is involutive up to cancellation",
                   [&](const EndMultiset& m) { return weyl_act(s, weyl_act(s, m)) == normalize(m); });
    }
    exhaustive("braid relation", [](const EndMultiset& m) {
        return weyl_act(1, weyl_act(2, weyl_act(1, m))) == weyl_act(2, weyl_act(1, weyl_act(2, m)));
    });
    exhaustive("Dynkin conjugates r1 into r2", [](const EndMultiset& m) { return dynkin(weyl_act(1, dynkin(m))) == weyl_act(2, m); });
    exhaustive("Dynkin conjugates r2 into r1", [](const EndMultiset& m) { return dynkin(weyl_act(2, dynkin(m))) == weyl_act(1, m); });
    exhaustive("Dynkin dualizes theta", [](const EndMultiset& m) { return theta(dynkin(m)) == dynkin_star(theta(m)); });
    exhaustive("normalize keeps theta, is idempotent, leaves no pair", [](const EndMultiset& m) {
        const auto n = normalize(m);
        return theta(n) == theta(m) && normalize(n) == n && !has_resolvable_pair(n);
    });
    {
        Check c = make_check("additivity up to cancellation", true);
        const auto small = all_multisets(2);
        for (const auto& a : small)
            for (const auto& b : small)
                for (int s : {1, 2})
                    if (weyl_act(s, a + b) != normalize(weyl_act(s, a) + weyl_act(s, b))) {
                        c.pass = false;
                        c.witness = json{{"a", to_string(a)}, {"b", to_string(b)}, {"s", s}};
                    }
        c.detail = std::to_string(small.size() * small.size()) + " pairs";
        r.checks.push_back(c);
    }
    const auto op = multiset_of({kOutPlus});
    r.checks.push_back(make_check("r1 r1 (o+) = o+", weyl_act(1, weyl_act(1, op)) == op,
                                  to_string(weyl_act(1, weyl_act(1, op)))));
    const auto b1 = weyl_act(1, weyl_act(2, weyl_act(1, op)));
    const auto b2 = weyl_act(2, weyl_act(1, weyl_act(2, op)));
    r.checks.push_back(make_check("r1 r2 r1 (o+) = r2 r1 r2 (o+) = o-", b1 == multiset_of({kOutMinus}) && b2 == b1,
                                  to_string(b1) + " / " + to_string(b2)));
    for (auto k : {EndKind::InPlus, EndKind::InMinus, EndKind::OutPlus, EndKind::OutMinus, EndKind::CompositeIn,
                   EndKind::CompositeOut}) {
        const auto tag = to_fp_tag(k);
        const bool size_rule = (k == EndKind::InPlus || k == EndKind::InMinus || k == EndKind::CompositeIn) ? tag.size() == 2
                                                                                                         : tag.size() == 1;
        r.checks.push_back(make_check("tag of " + to_string(shadow(k)) + " matches its theta",
                                      fp_weight_vector(tag) == as_weight(theta(shadow(k))) && size_rule));
    }
    return r;
}

SuiteReport p_cluster_tracks(const SuiteOptions&) {
    SuiteReport r{"p-cluster-tracks", "lamination clusters and P-clusters along mutation paths", {}};
    const auto& ch = dstar_chart();
    auto mu = [&](int l) { return MutationStep::mutate(ch.v(l)); };
    const Coweight w1{1, 0}, w2{0, 1}, zero{};
    auto at = [&](const Station& st, int l) { return st.theta_star[ch.v(l)]; };

    const auto grass = track_p_cluster(ch, {mu(5), mu(3)});
    const auto& s0 = grass.stations[0];
    r.checks.push_back(make_check("base: theta* = w1 at 1, 2 and w2 at 3, 4, 5, 6",
                                  at(s0, 1) == w1 && at(s0, 2) == w1 && at(s0, 3) == w2 && at(s0, 4) == w2 &&
                                      at(s0, 5) == w2 && at(s0, 6) == w2));
    r.checks.push_back(make_check("after mu5: theta* = 0 at 5", at(grass.stations[1], 5) == zero && at(grass.stations[1], 3) == w2));
    r.checks.push_back(make_check("after mu5 mu3: theta* = 0 at 3 and 5",
                                  at(grass.stations[2], 3) == zero && at(grass.stations[2], 5) == zero));

    const auto dosp = track_p_cluster(ch, {mu(5), mu(3), mu(2), mu(6), mu(4)});
    const std::vector<Vertex> d4 = {ch.v(1), ch.v(2), ch.v(4), ch.v(6)};
    auto e = [](int a, int b, int c) { return Weight::from_z3(a, b, c); };
    const std::vector<std::set<Weight>> expected = {
        {e(1, 0, 0), e(1, 1, 0)},
        {e(1, 0, 0), e(0, 1, 0), e(1, 1, 0)},
        {e(1, 0, 0), e(0, 1, 0), e(1, 1, 0), e(0, 0, 0)},
        {e(1, 0, 0), e(0, 1, 0), e(0, 0, 1), e(0, 0, 0)},
    };
    const char* names[] = {"{e1, e1+e2}", "{e1, e2, e1+e2}", "{e1, e2, e1+e2, 0}", "{e1, e2, e3, 0}"};
    for (std::size_t i = 0; i < expected.size(); ++i)
        r.checks.push_back(make_check(std::string("dosp station ") + std::to_string(i) + ": P-cluster " + names[i],
                                      p_cluster(dosp.stations[2 + i], d4) == expected[i]));

    const auto r2 = track_p_cluster(ch, weyl_loop(2, ch).alternative);
    auto th = [&](const Station& st, int l) { return st.theta[ch.v(l)]; };
    const Coweight mixed{1, -1};
    bool rest = true;
    for (const auto& st : r2.stations)
        for (int l : {3, 4, 5, 6}) rest &= th(st, l) == w1;
    r.checks.push_back(make_check("r2 track: theta stays w1 at 3, 4, 5, 6", rest));
    r.checks.push_back(make_check("r2 track: start w2 at 1 and 2", th(r2.stations[0], 1) == w2 && th(r2.stations[0], 2) == w2));
    r.checks.push_back(make_check("r2 track: after mu1, w1 - w2 at 1", th(r2.stations[1], 1) == mixed && th(r2.stations[1], 2) == w2));
    r.checks.push_back(make_check("r2 track: after mu2, w1 - w2 at 1 and 2",
                                  th(r2.stations[2], 1) == mixed && th(r2.stations[2], 2) == mixed));
    r.checks.push_back(make_check("r2 track: closing permutation keeps the values",
                                  th(r2.stations[3], 1) == mixed && th(r2.stations[3], 2) == mixed));
    return r;
}

SuiteReport surface_counts_suite(const SuiteOptions& o) {
    SuiteReport r{"surface-counts", "vertex, edge and triangle counts from the Euler characteristic", {}};
    for (const auto& tri : surfaces_of(o)) {
        const auto v = validate(tri);
        r.checks.push_back(make_check(label(tri) + ": valid", v.empty(), v.empty() ? "" : v.front()));
        const auto c = surface_counts(tri);
        const auto q = build_quiver(tri);
        const bool quiver_sizes = q.seed.size() == c.vertices && q.seed.unfrozen().size() == c.unfrozen;
        r.checks.push_back(make_check(label(tri) + ": counts match", c.consistent() && quiver_sizes,
                                      "chi=" + std::to_string(c.chi) + " |e|=" + std::to_string(c.edges) +
                                          " |t|=" + std::to_string(c.triangles) + " |I|=" + std::to_string(c.vertices) +
                                          " |I_uf|=" + std::to_string(c.unfrozen)));
    }
    return r;
}

}  // namespace

bool SuiteReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

json SuiteReport::to_json() const {
    json j = {{"suite", suite}, {"anchor", anchor}, {"pass", pass()}, {"checks", json::array()}};
    for (const auto& c : checks) {
        json jc = {{"name", c.name}, {"status", c.skipped ? "skipped" : (c.pass ? "pass" : "fail")}};
        if (!c.detail.empty()) jc["detail"] = c.detail;
        if (c.witness) jc["witness"] = *c.witness;
        j["checks"].push_back(jc);
    }
    return j;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"casimir-table", "weyl-relations", "weyl-loop-vs-pl", "exact-sequence",
                                                   "flip-consistency", "dynkin", "a-side", "end-calculus",
                                                   "p-cluster-tracks", "surface-counts"};
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
    static const std::map<std::string, std::function<SuiteReport(const SuiteOptions&)>> table = {
        {"casimir-table", casimir_table},   {"weyl-relations", weyl_relations},
        {"weyl-loop-vs-pl", weyl_loop_vs_pl}, {"exact-sequence", exact_sequence},
        {"flip-consistency", flip_consistency}, {"dynkin", dynkin_suite},
        {"a-side", a_side},                 {"end-calculus", end_calculus},
        {"p-cluster-tracks", p_cluster_tracks}, {"surface-counts", surface_counts_suite},
    };
    const auto it = table.find(name);
    if (it == table.end()) throw Error(ErrorKind::InvalidKind, "unknown suite '" + name + "'");
    return it->second(opts);
}

std::vector<PunctureChart> puncture_charts(const Triangulation& tri) {
    std::vector<PunctureChart> out;
    for (const auto& p : tri.points) {
        if (p.kind != PointKind::Puncture) continue;
        try {
            out.push_back(make_puncture_chart(tri, p.id));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::MissingChart) throw;
        }
    }
    return out;
}

std::vector<TropicalPoint> role_samples(std::size_t n, const std::vector<Vertex>& roles, Flavor f, std::size_t random_points,
                                        std::uint64_t rng_seed) {
    std::vector<TropicalPoint> out;
    for (const auto& v : orthant_samples(roles.size(), 0, 0)) {
        auto x = TropicalPoint::zero(f, n);
        for (std::size_t i = 0; i < roles.size(); ++i) x[roles[i]] = v[i];
        out.push_back(std::move(x));
    }
    for (auto& v : random_samples(n, random_points, rng_seed)) out.push_back(TropicalPoint{f, std::move(v)});
    return out;
}

std::vector<TropicalPoint> chart_samples(const PunctureChart& ch, Flavor f, std::size_t random_points, std::uint64_t rng_seed) {
    return role_samples(ch.size(), {ch.v(1), ch.v(2), ch.v(3), ch.v(4), ch.v(5), ch.v(6)}, f, random_points, rng_seed);
}

bool equal_on(const TropicalPoint& a, const TropicalPoint& b, const std::vector<Vertex>& vertices) {
    for (Vertex v : vertices)
        if (a[v] != b[v]) return false;
    return true;
}

}  // namespace sl3
