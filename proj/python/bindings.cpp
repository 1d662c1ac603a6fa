// Python bindings for the main operations: building codes from circulant
// parameters, verification, distances, weight distributions, table checks
// and randomized search.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hsd/codeops.hpp"
#include "hsd/constructions.hpp"
#include "hsd/graymap.hpp"
#include "hsd/search.hpp"
#include "hsd/tables.hpp"
#include "hsd/vec.hpp"

namespace py = pybind11;
using namespace hsd;

namespace {

struct PyCode {
    GeneratorMatrix g;

    size_t length() const { return g.length(); }
    size_t rank() const { return g.rank(); }
    std::string ring() const { return ring_name(g.ring()); }
    std::vector<std::string> rows() const {
        std::vector<std::string> out;
        for (size_t i = 0; i < g.rank(); ++i) {
            const auto r = g.m.row(i);
            out.push_back(format_vec({g.ring(), {r.begin(), r.end()}}));
        }
        return out;
    }
    bool is_self_dual() const { return verify_hermitian_self_dual(g); }
    PyCode gray() const { return {gray_image(g)}; }
    int min_dist(const std::string& method, int workers) const {
        EnumOptions eo;
        eo.workers = workers;
        return min_distance(g,
                            method == "exhaustive" ? DistanceMethod::Exhaustive
                                                   : DistanceMethod::InfoSet,
                            eo);
    }
    std::map<int, uint64_t> wdist(std::optional<int> cutoff, int workers) const {
        EnumOptions eo;
        eo.workers = workers;
        return weight_distribution_exhaustive(g, cutoff, eo).counts;
    }
    int64_t alpha(std::optional<int> weight, int workers) const {
        EnumOptions eo;
        eo.workers = workers;
        return alpha_of(g, weight, eo);
    }
};

PyCode build(const std::string& construction, const std::string& ring, const std::string& lam,
             const std::string& mu, const std::vector<std::string>& vectors) {
    CodeRecord rec;
    rec.ctor = construction_from_name(construction);
    rec.ring = ring_from_name(ring);
    rec.lambda = hex_decode(rec.ring, lam.at(0));
    rec.mu = hex_decode(rec.ring, mu.at(0));
    rec.vectors = vectors;
    return {rebuild_record(rec)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hermitian self-dual codes over GF(4) and GF(4)+uGF(4)";

    py::register_exception<Error>(m, "HsdError");

    py::class_<PyCode>(m, "Code")
        .def_property_readonly("length", &PyCode::length)
        .def_property_readonly("rank", &PyCode::rank)
        .def_property_readonly("ring", &PyCode::ring)
        .def("rows", &PyCode::rows)
        .def("is_self_dual", &PyCode::is_self_dual)
        .def("gray_image", &PyCode::gray)
        .def("min_distance", &PyCode::min_dist, py::arg("method") = "info_set",
             py::arg("workers") = 1)
        .def("weight_distribution", &PyCode::wdist, py::arg("cutoff") = std::nullopt,
             py::arg("workers") = 1)
        .def("alpha", &PyCode::alpha, py::arg("weight") = std::nullopt, py::arg("workers") = 1);

    m.def("build", &build, py::arg("construction"), py::arg("ring"), py::arg("lam") = "1",
          py::arg("mu") = "1", py::arg("vectors"));

    m.def(
        "building_up",
        [](const PyCode& parent, const std::string& delta, const std::string& epsilon) {
            const auto d = parse_vec(parent.g.ring(), delta);
            return PyCode{building_up(parent.g, d.v, hex_decode(parent.g.ring(), epsilon.at(0)))};
        },
        py::arg("parent"), py::arg("delta"), py::arg("epsilon") = "1");

    m.def("gray_map", [](const std::string& v) {
        return format_vec({RingId::F4, gray_map(parse_vec(RingId::F4U, v).v)});
    });

    m.def("unitary_elements", [](const std::string& ring) {
        const RingId r = ring_from_name(ring);
        std::string out;
        for (uint8_t x : unitary_elements(r)) out += hex_encode(r, x);
        return out;
    });

    m.def(
        "unitary_count",
        [](const std::string& ring, size_t n, const std::string& cache_dir) {
            return enumerate_unitary_circulants(ring_from_name(ring), n, cache_dir).total();
        },
        py::arg("ring"), py::arg("n"), py::arg("cache_dir") = "");

    m.def("distance_bound", &distance_bound);

    m.def(
        "verify_table",
        [](const std::string& id, bool extended, int workers, size_t max_rows) {
            const auto report = verify_table(id, {extended, workers, uint64_t(1) << 28, max_rows});
            return py::make_tuple(report.all_pass(), report.to_string());
        },
        py::arg("id"), py::arg("extended") = false, py::arg("workers") = 1,
        py::arg("max_rows") = 0);

    m.def("table_ids", [] {
        std::vector<std::string> ids;
        for (const auto& t : fixtures()) ids.push_back(t.id);
        return ids;
    });

    m.def(
        "search",
        [](const std::string& construction, const std::string& ring, int n, int k, int target_d,
           uint64_t budget, uint64_t seed, int workers, const std::string& out,
           const std::string& cache_dir) {
            SearchConfig cfg;
            cfg.ctor = construction_from_name(construction);
            cfg.ring = ring_from_name(ring);
            cfg.n = n;
            cfg.k = k;
            cfg.target_d = target_d;
            cfg.budget = budget;
            cfg.seed = seed;
            cfg.workers = workers;
            cfg.out = out;
            cfg.cache_dir = cache_dir;
            std::vector<std::string> lines;
            for (const auto& rec : run_search(cfg)) lines.push_back(rec.serialize());
            return lines;
        },
        py::arg("construction"), py::arg("ring"), py::arg("n"), py::arg("k") = 1,
        py::arg("target_d") = 0, py::arg("budget") = 100000, py::arg("seed") = 0,
        py::arg("workers") = 1, py::arg("out") = "", py::arg("cache_dir") = "");
}
