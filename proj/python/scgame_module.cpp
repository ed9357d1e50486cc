/*
 * Copyright 2026 The scgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Python bindings. Rationals cross the boundary as fractions.Fraction, an
// infinite factor as float("inf"). Players and strategies are 0-based.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "scg/analysis.hpp"
#include "scg/dynamics.hpp"
#include "scg/error.hpp"
#include "scg/generalized.hpp"
#include "scg/generators.hpp"
#include "scg/instance_io.hpp"
#include "scg/potentials.hpp"

namespace py = pybind11;
using namespace scg;

namespace {

py::object fraction_type()
{
    return py::module_::import("fractions").attr("Fraction");
}

py::object to_py(const Rational& r)
{
    py::object num = py::int_(py::str(r.get_num().get_str()));
    py::object den = py::int_(py::str(r.get_den().get_str()));
    return fraction_type()(num, den);
}

py::object to_py(const Extended& e)
{
    if (e.is_infinite())
        return py::float_(std::numeric_limits<double>::infinity());
    return to_py(e.value());
}

// int, float, Fraction, Decimal or a "p/q" string.
Rational to_rational(const py::handle& obj)
{
    if (py::isinstance<py::str>(obj))
        return parse_rational(obj.cast<std::string>());
    py::object f = fraction_type()(obj);
    Rational r(py::str(f.attr("numerator")).cast<std::string>() + "/" +
               py::str(f.attr("denominator")).cast<std::string>());
    r.canonicalize();
    return r;
}

// None, "inf" or float("inf") mean unbounded.
Extended to_extended(const py::handle& obj)
{
    if (obj.is_none())
        return Extended::infinity();
    if (py::isinstance<py::str>(obj))
        return parse_extended(obj.cast<std::string>());
    if (py::isinstance<py::float_>(obj) && std::isinf(obj.cast<double>()))
        return Extended::infinity();
    return Extended(to_rational(obj));
}

Game make_game(int strategies, const std::vector<std::vector<py::object>>& intrinsic,
               const std::vector<py::tuple>& edges)
{
    std::vector<std::vector<Rational>> w;
    for (const auto& row : intrinsic) {
        std::vector<Rational> r;
        for (const auto& x : row)
            r.push_back(to_rational(x));
        w.push_back(std::move(r));
    }
    std::vector<Edge> es;
    for (const auto& t : edges) {
        if (t.size() != 4)
            throw ArgumentError("edges are (i, j, weight, share_i) tuples");
        es.push_back({t[0].cast<int>(), t[1].cast<int>(), to_rational(t[2]), to_rational(t[3])});
    }
    return Game(strategies, std::move(w), std::move(es));
}

py::list fractions(const std::vector<Rational>& v)
{
    py::list out;
    for (const auto& x : v)
        out.append(to_py(x));
    return out;
}

py::dict best_response_dict(const BestResponse& br)
{
    py::dict d;
    d["strategy"] = br.strategy;
    d["utility"] = to_py(br.utility);
    d["current"] = to_py(br.current);
    d["factor"] = to_py(br.factor);
    return d;
}

py::dict deviation_dict(const DeviationReport& r)
{
    py::dict d;
    d["max_factor"] = to_py(r.max_factor);
    d["witness"] = r.witness;
    py::list players;
    for (const auto& br : r.players)
        players.append(best_response_dict(br));
    d["players"] = players;
    return d;
}

py::dict strong_dict(const StrongDeviationReport& r)
{
    py::dict d;
    d["stable"] = r.stable;
    d["checked"] = r.checked;
    if (!r.stable) {
        d["alternative"] = r.alternative;
        d["coalition"] = r.coalition;
        py::list factors;
        for (const auto& f : r.factors)
            factors.append(to_py(f));
        d["factors"] = factors;
    }
    return d;
}

py::dict trace_dict(const DynamicsTrace& t)
{
    py::dict d;
    d["terminal"] = t.terminal;
    d["reason"] = to_string(t.reason);
    py::list moves;
    for (const Move& mv : t.moves)
        moves.append(py::make_tuple(mv.player, mv.from, mv.to));
    d["moves"] = moves;
    return d;
}

py::dict census_dict(const EquilibriumCensus& c)
{
    auto entry = [](const CensusEntry& e) {
        py::dict d;
        d["profile"] = e.profile;
        d["welfare"] = to_py(e.welfare);
        d["max_factor"] = to_py(e.max_factor);
        d["is_equilibrium"] = e.is_equilibrium;
        d["is_strong"] = e.is_strong ? py::object(py::bool_(*e.is_strong)) : py::object(py::none());
        return d;
    };
    py::dict d;
    d["alpha"] = to_py(c.alpha);
    d["optimum"] = py::make_tuple(c.optimum.profile, to_py(c.optimum.welfare));
    py::list eq;
    for (const auto& e : c.equilibria)
        eq.append(entry(e));
    d["equilibria"] = eq;
    py::list rows;
    for (const auto& e : c.rows)
        rows.append(entry(e));
    d["rows"] = rows;
    d["min_max_factor"] = to_py(c.min_max_factor);
    d["price_of_anarchy"] = c.price_of_anarchy ? to_py(*c.price_of_anarchy) : py::object(py::none());
    d["price_of_stability"] = c.price_of_stability ? to_py(*c.price_of_stability) : py::object(py::none());
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Social coordination games: exact equilibrium computation and analysis";

    static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
    static py::exception<SizeError> size_error(m, "SizeError", PyExc_ValueError);
    static py::exception<ModelError> model_error(m, "ModelError", PyExc_ValueError);
    static py::exception<UnsupportedError> unsupported_error(m, "UnsupportedError", PyExc_NotImplementedError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::set_error(parse_error, e.what());
        } catch (const SizeError& e) {
            py::set_error(size_error, e.what());
        } catch (const ModelError& e) {
            py::set_error(model_error, e.what());
        } catch (const UnsupportedError& e) {
            py::set_error(unsupported_error, e.what());
        }
    });

    py::class_<Game>(m, "Game")
        .def(py::init(&make_game), py::arg("strategies"), py::arg("intrinsic"), py::arg("edges"),
             "intrinsic[i][k] utilities and (i, j, weight, share_i) edges")
        .def_static("from_json", [](const std::string& text) { return parse_instance(text); })
        .def("to_json", [](const Game& g) { return serialize_instance(g); })
        .def_property_readonly("players", &Game::players)
        .def_property_readonly("strategies", &Game::strategies)
        .def_property_readonly("edges",
                               [](const Game& g) {
                                   py::list out;
                                   for (const Edge& e : g.edges())
                                       out.append(py::make_tuple(e.i, e.j, to_py(e.weight), to_py(e.share_ij)));
                                   return out;
                               })
        .def("intrinsic", [](const Game& g, int i, int k) { return to_py(g.intrinsic(i, k)); })
        .def("__eq__", [](const Game& a, const Game& b) { return a == b; });

    py::class_<GeneralizedGame>(m, "GeneralizedGame")
        .def_static("from_json", [](const std::string& text) { return parse_generalized(text); })
        .def("to_json", [](const GeneralizedGame& g) { return serialize_generalized(g); })
        .def_property_readonly("players", &GeneralizedGame::players)
        .def_property_readonly("strategies", &GeneralizedGame::strategies)
        .def("welfare", [](const GeneralizedGame& g, const Profile& s) { return to_py(g.welfare(s)); });

    py::class_<OmegaGame>(m, "OmegaGame")
        .def_static("from_json", [](const std::string& text) { return parse_omega(text); })
        .def("to_json", [](const OmegaGame& g) { return serialize_omega(g); })
        .def_property_readonly("players", &OmegaGame::players)
        .def_property_readonly("strategies", &OmegaGame::strategies)
        .def_property_readonly("omega", [](const OmegaGame& g) { return to_py(g.omega()); })
        .def("feasible", &OmegaGame::feasible);

    // Generators.
    m.def("example1", [](py::object r) { return example1(to_rational(r)); }, py::arg("r") = 1);
    m.def("prop5", [](int mm, py::object r, py::object eps) { return prop5(mm, to_rational(r), to_rational(eps)); },
          py::arg("m"), py::arg("r") = 1, py::arg("eps") = "1/100");
    m.def("symmetric_pos_tight",
          [](int mm, py::object r, py::object eps) { return symmetric_pos_tight(mm, to_rational(r), to_rational(eps)); },
          py::arg("m"), py::arg("r") = 1, py::arg("eps") = "1/100");
    m.def("triangle_c", [](py::object c) { return triangle_c(to_rational(c)); }, py::arg("c"));
    m.def("random_game",
          [](int n, int mm, std::uint64_t seed, long max_num, long max_den, bool interior) {
              return random_game(n, mm, seed, {max_num, max_den}, interior);
          },
          py::arg("n"), py::arg("m"), py::arg("seed"), py::arg("max_numerator") = 10, py::arg("max_denominator") = 4,
          py::arg("interior_shares") = false);
    m.def("random_cc", [](int n, int mm, std::uint64_t seed, long max_gamma) { return random_cc(n, mm, seed, max_gamma); },
          py::arg("n"), py::arg("m"), py::arg("seed"), py::arg("max_gamma") = 4);
    m.def("random_symmetric", [](int n, int mm, std::uint64_t seed) { return random_symmetric(n, mm, seed); },
          py::arg("n"), py::arg("m"), py::arg("seed"));
    m.def("random_supermodular",
          [](int n, int mm, py::object r, std::uint64_t seed) { return random_supermodular(n, mm, to_rational(r), seed); },
          py::arg("n"), py::arg("m"), py::arg("r"), py::arg("seed"));
    m.def("random_omega",
          [](int n, int mm, py::object omega, std::uint64_t seed) { return random_omega(n, mm, to_rational(omega), seed); },
          py::arg("n"), py::arg("m"), py::arg("omega"), py::arg("seed"));

    // Core model.
    m.def("utility", [](const Game& g, const Profile& s, int i) { return to_py(utility(g, s, i)); });
    m.def("deviation_utility",
          [](const Game& g, const Profile& s, int i, int k) { return to_py(deviation_utility(g, s, i, k)); });
    m.def("welfare", [](const Game& g, const Profile& s) {
        UtilityBreakdown b = welfare(g, s);
        py::dict d;
        d["total"] = to_py(b.total);
        d["intrinsic"] = to_py(b.intrinsic);
        d["coordination"] = to_py(b.coordination);
        return d;
    });
    m.def("instance_stats", [](const Game& g) {
        InstanceStats st = instance_stats(g);
        py::dict d;
        d["best"] = fractions(st.best);
        d["intrinsic_total"] = to_py(st.intrinsic_total);
        d["coordination_total"] = to_py(st.coordination_total);
        d["k_star"] = st.k_star;
        d["imbalance"] = to_py(st.imbalance);
        return d;
    });

    // Dynamics.
    m.def("best_response", [](const Game& g, const Profile& s, int i) { return best_response_dict(best_response(g, s, i)); });
    m.def("run_dynamics",
          [](const Game& g, const Profile& start, py::object alpha, bool sqrt2) {
              MoveRule rule{sqrt2 ? Threshold::sqrt2() : Threshold::exact(to_rational(alpha))};
              return trace_dict(run_dynamics(g, start, rule));
          },
          py::arg("game"), py::arg("start"), py::arg("alpha") = 1, py::arg("sqrt2") = false);
    m.def("algorithm1_two", &algorithm1_two, py::arg("game"), py::arg("start"));
    m.def("strong_two", &strong_two, py::arg("game"));
    m.def("sqrt2_three", &sqrt2_three, py::arg("game"));
    m.def("one_shot",
          [](const Game& g, int k0, py::object alpha) {
              OneShotResult r = one_shot_alpha_br(g, k0, to_rational(alpha));
              py::dict d = trace_dict(r.trace);
              d["profile"] = r.profile;
              return d;
          },
          py::arg("game"), py::arg("k0"), py::arg("alpha") = 1);
    m.def("hybrid",
          [](const Game& g, py::object alpha, bool opt_oracle) {
              std::optional<Rational> opt;
              if (opt_oracle)
                  opt = brute_force_optimum(g).welfare;
              HybridReport h = hybrid(g, to_rational(alpha), opt);
              py::dict d;
              d["alpha"] = to_py(h.alpha);
              d["start_strategy"] = h.start_strategy;
              d["first"] = py::make_tuple(h.first.profile, to_py(h.first_welfare));
              d["second"] = py::make_tuple(h.second.profile, to_py(h.second_welfare));
              d["profile"] = h.chosen;
              d["welfare"] = to_py(h.chosen_welfare);
              d["rho"] = h.rho ? to_py(*h.rho) : py::object(py::none());
              return d;
          },
          py::arg("game"), py::arg("alpha") = "1618/1000", py::arg("opt_oracle") = false);

    // Analysis.
    m.def("deviation_report", [](const Game& g, const Profile& s) { return deviation_dict(deviation_report(g, s)); });
    m.def("verify_strong",
          [](const Game& g, const Profile& s, py::object alpha) {
              return strong_dict(verify_approx_strong(g, s, to_rational(alpha)));
          },
          py::arg("game"), py::arg("profile"), py::arg("alpha") = 1);
    m.def("brute_force_optimum", [](const Game& g) {
        Optimum o = brute_force_optimum(g);
        return py::make_tuple(o.profile, to_py(o.welfare));
    });
    m.def("census",
          [](const Game& g, py::object alpha, bool strong, bool all_rows) {
              CensusOptions opts;
              opts.strong_flags = strong;
              opts.keep_all_rows = all_rows;
              return census_dict(equilibrium_census(g, to_rational(alpha), opts));
          },
          py::arg("game"), py::arg("alpha") = 1, py::arg("strong") = false, py::arg("all_rows") = false);
    m.def("welfare_lower_bound",
          [](py::object alpha, py::object gamma, py::object mm) {
              return to_py(welfare_lower_bound(to_rational(alpha), to_extended(gamma), to_extended(mm)));
          },
          py::arg("alpha"), py::arg("gamma"), py::arg("m"));
    m.def("payment_stabilize",
          [](const Game& g, std::optional<Profile> s) {
              Optimum opt = brute_force_optimum(g);
              Profile target = s ? *s : opt.profile;
              PaymentPlan p = payment_stabilize(g, target, opt.welfare);
              py::dict d;
              d["profile"] = target;
              d["payments"] = fractions(p.payments);
              d["total"] = to_py(p.total);
              d["nu"] = to_py(p.nu);
              d["within_intrinsic_bound"] = p.within_intrinsic_bound;
              d["max_factor_after"] = to_py(augmented_max_factor(g, target, p.payments));
              return d;
          },
          py::arg("game"), py::arg("profile") = py::none());

    // Potentials.
    m.def("cc_recover", [](const Game& g) -> py::object {
        CcResult r = cc_recover(g);
        if (!r.ok())
            return py::none();
        return fractions(r.certificate->gamma);
    });
    m.def("ordinal_audit",
          [](const Game& g, std::size_t trials, std::uint64_t seed) {
              CcResult r = cc_recover(g);
              if (!r.ok())
                  throw ModelError("no potential certificate: " + r.failure->reason);
              AuditReport a = ordinal_audit(g, *r.certificate, trials, seed);
              py::dict d;
              d["checked"] = a.checked;
              d["violations"] = a.violations;
              return d;
          },
          py::arg("game"), py::arg("trials") = 10000, py::arg("seed") = 1);

    // Generalized models.
    m.def("supermodularity_degree", [](const GeneralizedGame& g) { return to_py(supermodularity_degree(g)); });
    m.def("triangle_nonexistence_check", [](py::object c) { return to_py(triangle_nonexistence_check(to_rational(c))); });
    m.def("one_shot_generalized",
          [](const GeneralizedGame& g, int k0) {
              GeneralizedOneShot r = one_shot_generalized(g, k0);
              py::dict d;
              d["profile"] = r.profile;
              d["r"] = to_py(r.r);
              d["alpha_used"] = to_py(r.alpha_used);
              d["guarantee"] = to_py(r.guarantee);
              d["max_factor"] = to_py(verify_generalized(g, r.profile).max_factor);
              return d;
          },
          py::arg("game"), py::arg("k0") = 0);
    m.def("lex_strong_eq", [](const OmegaGame& g) {
        LexResult r = lex_strong_eq(g);
        py::dict d;
        d["profile"] = r.profile;
        d["potential"] = fractions(r.potential);
        d["feasible_states"] = r.feasible_states;
        d["stable"] = verify_omega_strong(g, r.profile, 1 / g.omega()).stable;
        return d;
    });
}
