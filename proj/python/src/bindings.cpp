#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gf2p/divisors.hpp"
#include "gf2p/factor.hpp"
#include "gf2p/mersenne.hpp"
#include "gf2p/search.hpp"
#include "gf2p/serialize.hpp"
#include "gf2p/verify.hpp"

namespace py = pybind11;
using namespace gf2p;

namespace {

// Reports cross the boundary as plain dicts and lists.
py::object to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& v : j) out.append(to_py(v));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
            return out;
        }
        default: throw std::logic_error("unsupported JSON value");
    }
}

Poly as_poly(const py::object& o) {
    if (py::isinstance<Poly>(o)) return o.cast<Poly>();
    if (py::isinstance<py::str>(o)) return parse_poly(o.cast<std::string>());
    if (py::isinstance<py::int_>(o)) return Poly::from_mask(o.cast<Poly::Word>());
    throw py::type_error("expected Poly, str or int");
}

py::list factor_list(const Factorization& f) {
    py::list out;
    for (const auto& pp : f.factors) out.append(py::make_tuple(pp.prime, pp.mult));
    return out;
}

py::dict hit_class(const HitClass& c) {
    py::dict d;
    d["rep"] = c.rep;
    d["members"] = c.members;
    d["factors"] = factor_list(c.factors);
    d["catalog"] = c.catalog_name ? py::object(py::str(*c.catalog_name)) : py::object(py::none());
    d["trivial"] = c.trivial;
    d["indecomposable"] = c.indecomposable;
    d["mersenne_only"] = c.mersenne_only;
    return d;
}

}  // namespace

PYBIND11_MODULE(_gf2p, m) {
    m.doc() = "Polynomial arithmetic over GF(2) and (unitary) perfect polynomial tools";

    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Poly>(m, "Poly")
        .def(py::init([](const py::object& o) { return as_poly(o); }), py::arg("value"))
        .def_static("parse", &parse_poly, py::arg("text"))
        .def_static("from_mask", &Poly::from_mask)
        .def_property_readonly("degree", [](const Poly& p) -> py::object {
            auto d = p.degree();
            return d ? py::object(py::int_(*d)) : py::object(py::none());
        })
        .def("coeff", &Poly::coeff)
        .def("to_hex", &Poly::to_hex)
        .def("bar", [](const Poly& p) { return bar(p); })
        .def("__pow__", [](const Poly& p, std::uint64_t n) { return pow(p, n); })
        .def(py::self + py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(py::self % py::self)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__hash__", &Poly::hash)
        .def("__str__", [](const Poly& p) { return format(p); })
        .def("__repr__", [](const Poly& p) { return "Poly('" + format(p) + "')"; });
    py::implicitly_convertible<py::str, Poly>();

    m.def("parse", &parse_poly, py::arg("text"));
    m.def("catalog", [](const std::string& name) { return catalog().at(name); }, py::arg("name"));

    m.def("factorize", [](const Poly& p, std::uint64_t seed) { return factor_list(factorize(p, seed)); },
          py::arg("p"), py::arg("seed") = kDefaultSeed, "Sorted list of (prime, multiplicity).");
    m.def("is_irreducible", &is_irreducible, py::arg("p"));
    m.def("sigma", py::overload_cast<const Poly&, std::uint64_t>(&sigma), py::arg("a"), py::arg("seed") = kDefaultSeed);
    m.def("sigma_star", py::overload_cast<const Poly&, std::uint64_t>(&sigma_star), py::arg("a"),
          py::arg("seed") = kDefaultSeed);
    m.def("is_perfect", [](const Poly& a) { return to_py(to_json(is_perfect(a))); }, py::arg("a"));
    m.def("is_unitary_perfect", [](const Poly& a) { return to_py(to_json(is_unitary_perfect(a))); }, py::arg("a"));
    m.def("canonical_class_rep", &canonical_class_rep, py::arg("s"));

    m.def("mersenne_primes", [](unsigned max_degree) {
        py::list out;
        for (const auto& mp : enumerate_mersenne_primes(max_degree)) out.append(to_py(to_json(mp)));
        return out;
    }, py::arg("max_degree"));

    m.def("run_all", [](unsigned max_degree, unsigned max_h, std::optional<std::string> claim, unsigned jobs,
                        std::uint64_t seed) {
        VerifyOptions opts;
        opts.claim = std::move(claim);
        opts.jobs = jobs;
        opts.seed = seed;
        std::vector<TheoremReport> reports;
        {
            py::gil_scoped_release release;
            reports = run_all(max_degree, max_h, opts);
        }
        py::list out;
        for (const auto& r : reports) out.append(to_py(to_json(r)));
        return out;
    }, py::arg("max_degree"), py::arg("max_h"), py::arg("claim") = py::none(), py::arg("jobs") = 1,
       py::arg("seed") = kDefaultSeed);

    m.def("search", [](unsigned max_degree, const std::string& mode, const std::string& family, bool all_powers,
                       unsigned jobs, std::uint64_t seed) {
        SearchConfig cfg;
        cfg.max_degree = max_degree;
        cfg.mode = mode_from_string(mode);
        cfg.family = family_from_string(family);
        cfg.all_powers = all_powers;
        cfg.jobs = jobs;
        cfg.seed = seed;
        std::vector<Poly> hits;
        {
            py::gil_scoped_release release;
            if (cfg.family == Family::all) {
                hits = search_bruteforce(cfg);
            } else {
                for (auto& r : search_structured(cfg)) hits.push_back(std::move(r.poly));
            }
        }
        const HitReport report = classify_hits(hits, cfg.mode, seed);
        py::list classes;
        for (const auto& c : report.classes) classes.append(hit_class(c));
        py::dict out;
        out["hits"] = hits;
        out["classes"] = classes;
        out["outside_catalog"] = report.outside_catalog;
        out["outside_scope"] = report.outside_scope;
        return out;
    }, py::arg("max_degree"), py::arg("mode") = "perfect", py::arg("family") = "mersenne", py::arg("all_powers") = false,
       py::arg("jobs") = 1, py::arg("seed") = kDefaultSeed);

    m.attr("DEFAULT_SEED") = kDefaultSeed;
}
