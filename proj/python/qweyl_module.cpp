// Python bindings.  Thin and string/int based: weights are lists of ints,
// root-of-unity exponents are "a/N" strings, characters are dicts mapping
// weight tuples to integer coefficients.  Heavy per-object data (orbit, hom
// sets, root systems) lives behind the Workspace class so repeated queries
// do not recompute it.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qweyl/catalog.hpp"
#include "qweyl/verification.hpp"

namespace py = pybind11;
using namespace qweyl;

namespace {

Weight to_weight(const std::vector<long long>& coords, size_t theta, const char* what) {
    if (coords.size() != theta)
        throw UsageError(std::string(what) + " needs " + std::to_string(theta) +
                         " coordinates, got " + std::to_string(coords.size()));
    return Weight(coords);
}

TorusCharacter to_pi(const std::vector<std::string>& k, const std::vector<std::string>& l,
                     size_t theta) {
    TorusCharacter pi = TorusCharacter::trivial(theta);
    if (k.empty() && l.empty()) return pi;
    if (k.size() != theta || l.size() != theta)
        throw UsageError("torus character needs " + std::to_string(theta) +
                         " K exponents and as many L exponents");
    for (size_t i = 0; i < theta; ++i) pi.k[i] = RootOfUnity::parse(k[i]);
    for (size_t i = 0; i < theta; ++i) pi.l[i] = RootOfUnity::parse(l[i]);
    return pi;
}

std::vector<int> to_word(const std::vector<long long>& gens1, size_t theta) {
    std::vector<int> word;
    for (long long g : gens1) {
        if (g < 1 || static_cast<size_t>(g) > theta)
            throw UsageError("word generators are 1.." + std::to_string(theta));
        word.push_back(static_cast<int>(g - 1));
    }
    return word;
}

py::list weight_list(const Weight& w) {
    py::list out;
    for (size_t i = 0; i < w.theta(); ++i) out.append(w[i]);
    return out;
}

py::tuple weight_tuple(const Weight& w) {
    py::tuple out(w.theta());
    for (size_t i = 0; i < w.theta(); ++i) out[i] = w[i];
    return out;
}

py::dict character_dict(const FormalCharacter& ch) {
    py::dict out;
    for (const auto& [mu, coeff] : ch.terms()) out[weight_tuple(mu)] = coeff;
    return out;
}

std::vector<std::vector<std::string>> matrix_rows(const BraidingMatrix& q) {
    std::vector<std::vector<std::string>> rows(q.theta());
    for (size_t i = 0; i < q.theta(); ++i)
        for (size_t j = 0; j < q.theta(); ++j) rows[i].push_back(q.at(i, j).str());
    return rows;
}

// All orbit-dependent queries hang off one precomputed context.
struct Workspace {
    ObjectContext ctx;

    explicit Workspace(const BraidingMatrix& q) : ctx(make_context(q)) {}

    size_t theta() const { return ctx.groupoid.theta(); }
    const RootSystemData& rs() const { return ctx.base_system(); }
    const BraidingMatrix& q() const { return ctx.base_matrix(); }

    size_t object_count() const { return ctx.groupoid.size(); }

    std::vector<std::vector<std::vector<std::string>>> objects() const {
        std::vector<std::vector<std::vector<std::string>>> out;
        for (size_t i = 0; i < ctx.groupoid.size(); ++i)
            out.push_back(matrix_rows(ctx.groupoid.object(static_cast<int>(i))));
        return out;
    }

    std::vector<std::tuple<int, int, int>> edges() const {
        std::vector<std::tuple<int, int, int>> out;
        for (const GroupoidEdge& e : ctx.groupoid.edges())
            out.emplace_back(e.from, e.gen + 1, e.to);
        return out;
    }

    py::dict roots() const {
        py::list roots, bounds, cartan;
        for (size_t r = 0; r < rs().positive_roots.size(); ++r) {
            roots.append(weight_list(rs().positive_roots[r]));
            bounds.append(rs().bounds[r]);
            cartan.append(static_cast<bool>(rs().is_cartan[r]));
        }
        py::list word;
        for (int g : rs().w0.word) word.append(g + 1);
        long long dim = 1;
        for (long long b : rs().bounds) dim *= b;
        py::dict out;
        out["positive_roots"] = roots;
        out["bounds"] = bounds;
        out["cartan"] = cartan;
        out["beta_top"] = weight_list(rs().beta_top);
        out["longest_word"] = word;
        out["dim_negative_part"] = dim;
        return out;
    }

    long long n(const std::vector<long long>& beta, const std::vector<long long>& mu,
                const std::vector<std::string>& k, const std::vector<std::string>& l) const {
        return n_beta(q(), rs(), to_pi(k, l, theta()), to_weight(mu, theta(), "mu"),
                      to_weight(beta, theta(), "beta"));
    }

    py::list down_arrow(const std::vector<long long>& beta, const std::vector<long long>& mu,
                        const std::vector<std::string>& k,
                        const std::vector<std::string>& l) const {
        return weight_list(down(q(), rs(), to_pi(k, l, theta()),
                                to_weight(beta, theta(), "beta"),
                                to_weight(mu, theta(), "mu")));
    }

    py::list strongly_linked(const std::vector<long long>& mu,
                             const std::vector<std::string>& k,
                             const std::vector<std::string>& l) const {
        py::list out;
        for (const LinkedWeight& lw :
             strongly_linked_set(q(), rs(), to_pi(k, l, theta()),
                                 to_weight(mu, theta(), "mu"))) {
            py::list chain;
            for (const auto& [beta, n] : lw.chain)
                chain.append(py::make_tuple(weight_list(beta), n));
            py::dict entry;
            entry["lambda"] = weight_list(lw.lambda);
            entry["chain"] = chain;
            out.append(entry);
        }
        return out;
    }

    py::dict atypicality_of(const std::vector<long long>& mu,
                            const std::vector<std::string>& k,
                            const std::vector<std::string>& l) const {
        Atypicality a =
            atypicality(q(), rs(), to_pi(k, l, theta()), to_weight(mu, theta(), "mu"));
        py::list zero_roots;
        for (const Weight& beta : a.zero_roots) zero_roots.append(weight_list(beta));
        py::dict out;
        out["degree"] = a.degree;
        out["zero_roots"] = zero_roots;
        return out;
    }

    py::list classes(const std::vector<long long>& lo, const std::vector<long long>& hi,
                     const std::vector<std::string>& k,
                     const std::vector<std::string>& l) const {
        WeightBox window{to_weight(lo, theta(), "lo"), to_weight(hi, theta(), "hi")};
        py::list out;
        for (const auto& cls : linkage_classes(q(), rs(), to_pi(k, l, theta()), window)) {
            py::list members;
            for (const Weight& w : cls) members.append(weight_list(w));
            out.append(members);
        }
        return out;
    }

    py::dict verma(const std::vector<long long>& mu) const {
        return character_dict(ch_verma(rs(), to_weight(mu, theta(), "mu")));
    }

    py::dict twisted(const std::vector<long long>& word,
                     const std::vector<long long>& mu) const {
        Morphism w = morphism_from_word(ctx.groupoid, ctx.base, to_word(word, theta()));
        return character_dict(ch_twisted_verma(rs(), w, to_weight(mu, theta(), "mu")));
    }

    py::dict simple(const std::vector<long long>& mu, const std::vector<std::string>& k,
                    const std::vector<std::string>& l) const {
        TorusCharacter pi = to_pi(k, l, theta());
        Weight w = to_weight(mu, theta(), "mu");
        Atypicality a = atypicality(q(), rs(), pi, w);
        return character_dict(a.degree == 0 ? ch_simple_typical(q(), rs(), pi, w)
                                            : ch_simple_1atypical(q(), rs(), pi, w));
    }

    py::dict kernel(const std::vector<long long>& word, long long simple_index, long long t,
                    const std::vector<long long>& mu) const {
        if (simple_index < 1 || static_cast<size_t>(simple_index) > theta())
            throw UsageError("simple index is 1.." + std::to_string(theta()));
        Morphism w = morphism_from_word(ctx.groupoid, ctx.base, to_word(word, theta()));
        Weight beta =
            w.map.apply(Weight::basis(theta(), static_cast<size_t>(simple_index - 1)));
        return character_dict(ch_kernel_phi(rs(), w, beta, t, to_weight(mu, theta(), "mu")));
    }

    std::vector<std::tuple<std::string, bool, std::string>> verify(uint64_t seed) const {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& [name, outcome] : run_suite(q(), seed))
            out.emplace_back(name, outcome.pass, outcome.detail);
        return out;
    }
};

}  // namespace

PYBIND11_MODULE(qweyl, m) {
    m.doc() = "Weyl groupoids of diagonal braidings: root systems, linkage, characters";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const UsageError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const Error& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    py::class_<BraidingMatrix>(m, "Braiding")
        .def(py::init([](const std::vector<std::vector<std::string>>& rows) {
                 size_t theta = rows.size();
                 std::vector<RootOfUnity> entries;
                 for (const auto& row : rows) {
                     if (row.size() != theta)
                         throw UsageError("braiding rows must form a square matrix");
                     for (const auto& cell : row) entries.push_back(RootOfUnity::parse(cell));
                 }
                 return BraidingMatrix(theta, std::move(entries));
             }),
             py::arg("rows"), "Build from a square list of exponent strings \"a/N\"")
        .def_property_readonly("theta", &BraidingMatrix::theta)
        .def("entry", [](const BraidingMatrix& q, size_t i,
                         size_t j) { return q.at(i, j).str(); })
        .def("rows", &matrix_rows)
        .def("cartan_entry",
             [](const BraidingMatrix& q, size_t i, size_t j) { return q.cartan_entry(i, j); })
        .def("bound",
             [](const BraidingMatrix& q, const std::vector<long long>& beta) -> py::object {
                 auto b = q.bound(to_weight(beta, q.theta(), "beta"));
                 if (!b) return py::none();
                 return py::cast(static_cast<long long>(*b));
             })
        .def("reflect",
             [](const BraidingMatrix& q, size_t i) {
                 if (i >= q.theta()) throw UsageError("reflect index out of range");
                 return q.reflect(i);
             })
        .def("transpose", &BraidingMatrix::transpose)
        .def("to_json", &matrix_to_json)
        .def("__eq__", [](const BraidingMatrix& a,
                          const BraidingMatrix& b) { return a == b; })
        .def("__repr__",
             [](const BraidingMatrix& q) { return "Braiding(" + q.str() + ")"; });

    m.def("catalog_keys", &catalog_keys);
    m.def(
        "catalog",
        [](const std::string& key, const std::map<std::string, std::string>& params) {
            return catalog_matrix(key, params);
        },
        py::arg("key"), py::arg("params") = std::map<std::string, std::string>{});
    m.def("from_json", &parse_matrix_json, py::arg("text"));

    py::class_<Workspace>(m, "Workspace")
        .def(py::init<const BraidingMatrix&>(), py::arg("braiding"),
             "Precompute the orbit, hom sets and root systems of a braiding")
        .def_property_readonly("theta", &Workspace::theta)
        .def_property_readonly("object_count", &Workspace::object_count)
        .def("objects", &Workspace::objects)
        .def("edges", &Workspace::edges, "Orbit edges as (from, generator, to), 1-based gens")
        .def("roots", &Workspace::roots)
        .def("n", &Workspace::n, py::arg("beta"), py::arg("mu"),
             py::arg("k") = std::vector<std::string>{},
             py::arg("l") = std::vector<std::string>{},
             "Scan exponent n of beta at mu (0 when the scan misses)")
        .def("down", &Workspace::down_arrow, py::arg("beta"), py::arg("mu"),
             py::arg("k") = std::vector<std::string>{},
             py::arg("l") = std::vector<std::string>{}, "mu - n*beta")
        .def("strongly_linked", &Workspace::strongly_linked, py::arg("mu"),
             py::arg("k") = std::vector<std::string>{},
             py::arg("l") = std::vector<std::string>{})
        .def("atypicality", &Workspace::atypicality_of, py::arg("mu"),
             py::arg("k") = std::vector<std::string>{},
             py::arg("l") = std::vector<std::string>{})
        .def("linkage_classes", &Workspace::classes, py::arg("lo"), py::arg("hi"),
             py::arg("k") = std::vector<std::string>{},
             py::arg("l") = std::vector<std::string>{})
        .def("ch_verma", &Workspace::verma, py::arg("mu"))
        .def("ch_twisted", &Workspace::twisted, py::arg("word"), py::arg("mu"),
             "Twisted standard character; word is 1-based and target-anchored")
        .def("ch_simple", &Workspace::simple, py::arg("mu"),
             py::arg("k") = std::vector<std::string>{},
             py::arg("l") = std::vector<std::string>{},
             "Simple character (atypicality degree 0 or 1)")
        .def("ch_kernel", &Workspace::kernel, py::arg("word"), py::arg("simple"),
             py::arg("t"), py::arg("mu"))
        .def("verify", &Workspace::verify, py::arg("seed") = 12345,
             "Run the consistency suite; returns (name, pass, detail) triples");
}
