#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "defk/bigint.hpp"
#include "defk/canonical.hpp"
#include "defk/catalog.hpp"
#include "defk/configuration.hpp"
#include "defk/enumerate.hpp"
#include "defk/errors.hpp"
#include "defk/formulas.hpp"
#include "defk/io.hpp"
#include "defk/matrix.hpp"
#include "defk/parallelism.hpp"
#include "defk/sieve.hpp"

namespace py = pybind11;

namespace {

py::object to_py_int(const defk::BigInt& x) {
    return py::module_::import("builtins").attr("int")(x.str());
}

std::string int_to_string(const py::int_& x) {
    return py::module_::import("builtins").attr("str")(x).cast<std::string>();
}

py::object to_py_fraction(const defk::BigRat& x) {
    const defk::BigInt num = boost::multiprecision::numerator(x);
    const defk::BigInt den = boost::multiprecision::denominator(x);
    return py::module_::import("fractions")
        .attr("Fraction")(to_py_int(num), to_py_int(den));
}

py::dict verdict_to_dict(const defk::ParameterVerdict& verdict) {
    py::dict out;
    out["n"] = verdict.n;
    out["k"] = verdict.k;
    out["rule"] = std::string(defk::rule_name(verdict.rule));
    out["verdict"] = std::string(defk::verdict_name(verdict.verdict));
    py::dict witnesses;
    for (const auto& [key, value] : verdict.witnesses) {
        witnesses[py::str(key)] = value;
    }
    out["witnesses"] = witnesses;
    return out;
}

defk::Configuration config_from_text(const std::string& text) {
    std::istringstream in(text);
    return defk::read_text(in, "<string>");
}

defk::Configuration config_from_json(const std::string& text) {
    std::istringstream in(text);
    return defk::read_json(in, "<string>");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact analysis of combinatorial configurations";

    py::register_exception<defk::Error>(m, "Error");

    py::class_<defk::Configuration>(m, "Configuration")
        .def_static(
            "validate",
            [](int points, const std::vector<std::vector<int>>& lines) {
                return defk::Configuration::validate(points, lines);
            },
            py::arg("points"), py::arg("lines"),
            R"(Check the configuration axioms and return the validated structure.)")
        .def_property_readonly("points", &defk::Configuration::points)
        .def_property_readonly("line_count", &defk::Configuration::line_count)
        .def_property_readonly("points_per_line", &defk::Configuration::points_per_line)
        .def_property_readonly("lines_per_point", &defk::Configuration::lines_per_point)
        .def_property_readonly("symmetric", &defk::Configuration::symmetric)
        .def_property_readonly("lines",
                               [](const defk::Configuration& c) { return c.lines(); })
        .def("__eq__",
             [](const defk::Configuration& a, const defk::Configuration& b) {
                 return a == b;
             })
        .def("__repr__", [](const defk::Configuration& c) {
            std::ostringstream out;
            out << "Configuration(" << c.points() << " points, " << c.line_count()
                << " lines of " << c.points_per_line() << ")";
            return out.str();
        });

    m.def("derived_params", [](const defk::Configuration& c) {
        const defk::DerivedParams params = defk::derived_params(c);
        py::dict out;
        out["order"] = params.order;
        out["deficiency"] = params.deficiency;
        return out;
    });
    m.def("dual", &defk::dual);
    m.def(
        "build_cyclic",
        [](int modulus, const std::vector<int>& base_block) {
            return defk::build_cyclic({modulus, base_block});
        },
        py::arg("modulus"), py::arg("base_block"));

    m.def("catalog_names", [] {
        std::vector<std::string> names;
        for (const auto& entry : defk::catalog_entries()) names.push_back(entry.name);
        return names;
    });
    m.def("catalog_get",
          [](const std::string& name) { return defk::catalog_get(name).config; });
    m.def("catalog_notes",
          [](const std::string& name) { return defk::catalog_get(name).notes; });

    m.def("incidence_matrix", [](const defk::Configuration& c) {
        const defk::IntMatrix n = defk::incidence_matrix(c);
        std::vector<std::vector<int>> rows(n.rows(), std::vector<int>(n.cols()));
        for (int i = 0; i < n.rows(); ++i) {
            for (int j = 0; j < n.cols(); ++j) {
                rows[i][j] = static_cast<int>(n.at(i, j));
            }
        }
        return rows;
    });
    m.def("gram_determinant", [](const defk::Configuration& c) {
        return to_py_int(defk::determinant(defk::gram(defk::incidence_matrix(c))));
    });
    m.def("incidence_determinant", [](const defk::Configuration& c) {
        return to_py_int(defk::determinant(defk::incidence_matrix(c)));
    });

    m.def("closed_form_det", [](int n, int k) {
        return to_py_int(defk::closed_form_det(n, k));
    });
    m.def("cycle_block_det", [](int n, int t) {
        return to_py_int(defk::cycle_block_det(n, t));
    });
    m.def("eq2_det", [](int n, const std::vector<int>& lengths) {
        return to_py_int(defk::eq2_det(defk::CycleSpectrum{n, lengths}));
    });
    m.def("structural_det", [](int n, int k) {
        return to_py_int(defk::determinant(defk::assemble_structural_B(n, k)));
    });
    m.def("cycle_pattern_det", [](int n, const std::vector<int>& lengths) {
        return to_py_int(
            defk::determinant(defk::assemble_cycle_B(defk::CycleSpectrum{n, lengths})));
    });
    m.def("grand_sum_inverse_quadform", [](int t, int n) {
        return to_py_fraction(defk::grand_sum_inverse_quadform(t, n));
    });
    m.def("is_perfect_square", [](const py::int_& x) {
        return defk::is_perfect_square(defk::BigInt(int_to_string(x)));
    });
    m.def("is_sum_of_two_squares", [](const py::int_& x) {
        return defk::is_sum_of_two_squares(defk::BigInt(int_to_string(x)));
    });

    m.def("is_parallel", &defk::is_parallel);
    m.def("has_tops", &defk::has_tops);
    m.def("satisfies_playfair", &defk::satisfies_playfair);
    m.def("is_k_net", &defk::is_k_net);
    m.def("parallel_classes", [](const defk::Configuration& c) {
        return defk::parallel_classes(c).groups;
    });
    m.def("cycle_decomposition", [](const defk::Configuration& c) {
        return defk::cycle_decomposition(c).groups;
    });
    m.def("check_parity_theorem", [](const defk::Configuration& c) {
        const defk::ParityVerdict verdict = defk::check_parity_theorem(c);
        py::dict out;
        out["m"] = verdict.cycle_count;
        out["parity"] = verdict.even ? "even" : "odd";
        out["is_9_1"] = verdict.matches_nine_one;
        out["holds"] = verdict.holds;
        out["lengths"] = verdict.lengths;
        return out;
    });

    m.def("sieve_k2", [](int n) { return verdict_to_dict(defk::sieve_k2(n)); });
    m.def("sieve_tops",
          [](int n, int k) { return verdict_to_dict(defk::sieve_tops(n, k)); });
    m.def("sieve_bruck_ryser",
          [](int n) { return verdict_to_dict(defk::sieve_bruck_ryser(n)); });
    m.def(
        "scan",
        [](int n_min, int n_end, const std::vector<int>& ks) {
            py::list rows;
            for (const auto& row : defk::scan(n_min, n_end, ks)) {
                rows.append(verdict_to_dict(row));
            }
            return rows;
        },
        py::arg("n_min"), py::arg("n_end"), py::arg("ks"),
        R"(Rule verdicts over the half-open order range [n_min, n_end).)");

    m.def(
        "enumerate_configurations",
        [](int v, int r, std::optional<long long> node_limit) {
            defk::SearchBudget budget;
            budget.node_limit = node_limit;
            return defk::enumerate_configurations(v, r, budget);
        },
        py::arg("v"), py::arg("r"), py::arg("node_limit") = py::none());
    m.def("canonical_fingerprint", [](const defk::Configuration& c) {
        return defk::canonical_form(c).fingerprint();
    });
    m.def("are_isomorphic", &defk::are_isomorphic);

    m.def("from_text", &config_from_text);
    m.def("from_json", &config_from_json);
    m.def("to_text", &defk::to_text);
    m.def("to_json_text", &defk::to_json_text);
}
