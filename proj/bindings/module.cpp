#include "charstack/ffcount.hpp"
#include "charstack/serialize.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace charstack;

namespace {

json json_from_py(const py::object& obj) {
    py::module_ pyjson = py::module_::import("json");
    std::string dumped = py::cast<std::string>(pyjson.attr("dumps")(obj));
    return json::parse(dumped);
}

py::object py_from_json(const json& j) {
    py::module_ pyjson = py::module_::import("json");
    return pyjson.attr("loads")(j.dump());
}

StarQuiverData quiver_from_py(const py::object& config) {
    return build_star_quiver(config_from_json(json_from_py(config)));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact E-series and mixed Poincare series of character stacks";

    m.def("hlrv", [](const py::object& mu, int genus) {
        MultiPartition mp = multipartition_from_json(json_from_py(mu));
        RatFun H = hlrv_H(mp, genus);
        py::dict out;
        out["H"] = H.str();
        out["E_spec"] = specialize_E(H).str();
        out["mixed_spec"] = specialize_mixed(H).str();
        out["H_json"] = py_from_json(ratfun_to_json(H));
        return out;
    }, py::arg("mu"), py::arg("genus") = 0,
       "HH_mu(z,w) with its q- and (q,t)-specializations");

    m.def("eseries", [](const py::object& config) {
        StarQuiverData data = quiver_from_py(config);
        py::dict out;
        out["E"] = eseries(data).str();
        out["generic"] = is_generic(data).generic;
        py::list hs;
        for (const auto& d : h_star(data)) hs.append(d);
        out["h_star"] = hs;
        return out;
    }, py::arg("config"), "E-series of the character stack described by a config dict");

    m.def("mixed_poincare", [](const py::object& config) {
        StarQuiverData data = quiver_from_py(config);
        return mixed_poincare(data).str();
    }, py::arg("config"), "conjectural mixed Poincare series H_c(q, t)");

    m.def("verify_ff", [](const py::object& config, const std::vector<long>& qs) {
        CharStackConfig cfg = config_from_json(json_from_py(config));
        StarQuiverData data = build_star_quiver(cfg);
        RatFun E = eseries(data);
        py::list rows;
        for (long q : qs) {
            py::dict row;
            row["q"] = q;
            auto params = realize(cfg, data, q);
            row["realized"] = bool(params);
            if (params) {
                Rational sc = stack_count(*params, data);
                std::map<std::string, RatFun> at{{"q", RatFun(Rational(q))}};
                Rational ev = E.substituted(at).constant_value();
                row["stack_count"] = to_string(sc);
                row["E_at_q"] = to_string(ev);
                row["match"] = (sc == ev);
            }
            rows.append(row);
        }
        return rows;
    }, py::arg("config"), py::arg("qs"), "point-count cross-check over small prime fields");

    m.def("lr_coefficient", [](const std::vector<int>& nu, const std::vector<int>& lam,
                               const std::vector<int>& mu) {
        Int c = lr_coefficient(Partition(nu), Partition(lam), Partition(mu));
        return c.convert_to<long long>();
    }, "Littlewood-Richardson coefficient c^nu_{lambda,mu}");

    m.def("modified_macdonald_str", [](const std::vector<int>& mu) {
        return modified_macdonald_generic(Partition(mu)).str();
    }, "H-tilde_mu(x; q, t) in the Schur basis");
}
