#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperlat/json_io.hpp"
#include "hyperlat/quotient.hpp"
#include "hyperlat/salem.hpp"
#include "hyperlat/transfer.hpp"
#include "hyperlat/version.hpp"
#include "hyperlat/weyl.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

json parse(const std::string& s, const char* what) {
    try {
        return json::parse(s);
    } catch (const json::exception& e) {
        throw hyperlat::input_error("MalformedInput", std::string(what) + ": " + e.what());
    }
}

std::string dump(const json& j) {
    return hyperlat::canonical_dump(j);
}

hyperlat::Lattice lattice_of(const std::string& s) {
    return hyperlat::jsonio::json_lattice(parse(s, "lattice"));
}

json verdict_json(const hyperlat::SalemVerdict& v) {
    return json{{"is_salem", v.is_salem},
                {"reason", hyperlat::to_string(v.reason)},
                {"root_counts", json::array({v.root_counts.first, v.root_counts.second})}};
}

}  // namespace

PYBIND11_MODULE(_hyperlat, m) {
    m.doc() = "exact arithmetic for hyperbolic lattices (JSON-string interface)";
    m.attr("__version__") = hyperlat::kToolVersion;

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const hyperlat::Error& e) {
            switch (e.kind()) {
                case hyperlat::ErrorKind::input:
                    PyErr_SetString(PyExc_ValueError, e.what());
                    break;
                case hyperlat::ErrorKind::math_assertion:
                    PyErr_SetString(PyExc_ArithmeticError, e.what());
                    break;
                case hyperlat::ErrorKind::cap_exceeded:
                    PyErr_SetString(PyExc_RuntimeError, e.what());
                    break;
            }
        }
    });

    m.def("signature", [](const std::string& lattice) {
        hyperlat::Lattice l = lattice_of(lattice);
        auto [plus, minus] = hyperlat::signature(l);
        return dump(json{{"label", l.label},
                         {"rank", l.rank()},
                         {"signature", json::array({plus, minus})},
                         {"even", hyperlat::is_even(l)},
                         {"hyperbolic", hyperlat::is_hyperbolic(l)}});
    });

    m.def("charpoly", [](const std::string& matrix) {
        hyperlat::IntMatrix mat = hyperlat::jsonio::json_matrix(parse(matrix, "matrix"));
        return dump(hyperlat::jsonio::poly_json(hyperlat::charpoly(mat)));
    });

    m.def("cyclotomic", [](unsigned long n) {
        return dump(hyperlat::jsonio::poly_json(hyperlat::cyclotomic(n)));
    });

    m.def("is_salem", [](const std::string& poly) {
        hyperlat::IntPolynomial p = hyperlat::jsonio::json_poly(parse(poly, "polynomial"));
        return dump(verdict_json(hyperlat::is_salem(p)));
    });

    m.def("strip_cyclotomic", [](const std::string& poly) {
        hyperlat::IntPolynomial p = hyperlat::jsonio::json_poly(parse(poly, "polynomial"));
        return dump(hyperlat::jsonio::report_json(hyperlat::strip_cyclotomic(p)));
    });

    m.def("salem_degree", [](const std::string& lattice, const std::string& isometry) {
        hyperlat::Lattice l = lattice_of(lattice);
        hyperlat::Isometry f = hyperlat::jsonio::json_isometry(parse(isometry, "isometry"), l);
        auto [degree, report] = hyperlat::salem_degree(l, f);
        json out = hyperlat::jsonio::report_json(report);
        out["lattice"] = l.label;
        return dump(out);
    });

    m.def("order_mod", [](const std::string& matrix, const std::string& modulus, long cap) {
        hyperlat::IntMatrix mat = hyperlat::jsonio::json_matrix(parse(matrix, "matrix"));
        hyperlat::Int n = hyperlat::jsonio::json_int(json(modulus));
        return hyperlat::order_mod(mat, n, cap);
    }, py::arg("matrix"), py::arg("modulus"), py::arg("cap") = hyperlat::kDefaultOrderCap);

    m.def("roots_with_pairing",
          [](const std::string& lattice, const std::string& vec, const std::string& pairing) {
              hyperlat::Lattice l = lattice_of(lattice);
              hyperlat::LatticeVector v{l.label, hyperlat::jsonio::json_vec(parse(vec, "vector"))};
              hyperlat::Int c = hyperlat::jsonio::json_int(json(pairing));
              auto roots = hyperlat::roots_with_pairing(l, v, c);
              json arr = json::array();
              for (const auto& r : roots) {
                  arr.push_back(hyperlat::jsonio::vec_json(r.coords));
              }
              return dump(json{{"count", roots.size()}, {"roots", std::move(arr)}});
          });

    m.def("chamber_walk",
          [](const std::string& lattice, const std::string& from, const std::string& to, long cap) {
              hyperlat::Lattice l = lattice_of(lattice);
              hyperlat::LatticeVector v{l.label, hyperlat::jsonio::json_vec(parse(from, "from"))};
              hyperlat::LatticeVector w{l.label, hyperlat::jsonio::json_vec(parse(to, "to"))};
              hyperlat::WalkResult res = hyperlat::chamber_walk(l, v, w, cap);
              json word = json::array();
              for (const auto& r : res.word.roots) {
                  word.push_back(hyperlat::jsonio::vec_json(r.coords));
              }
              return dump(json{{"length", res.word.roots.size()},
                               {"word", std::move(word)},
                               {"end", hyperlat::jsonio::vec_json(res.end.coords)}});
          },
          py::arg("lattice"), py::arg("from_vec"), py::arg("to_vec"),
          py::arg("cap") = hyperlat::kDefaultWalkCap);

    m.def("transfer",
          [](const std::string& lattice, const std::string& isometry, const std::string& embedding,
             const std::optional<std::string>& ample, long cap_order, long cap_walk,
             bool require_chamber) {
              hyperlat::Lattice l = lattice_of(lattice);
              hyperlat::Isometry f = hyperlat::jsonio::json_isometry(parse(isometry, "isometry"), l);
              hyperlat::Embedding e =
                  hyperlat::jsonio::json_embedding(parse(embedding, "embedding"), l);
              std::optional<hyperlat::LatticeVector> a;
              if (ample) {
                  a = hyperlat::LatticeVector{l.label, hyperlat::jsonio::json_vec(parse(*ample, "ample"))};
              }
              hyperlat::Caps caps{cap_order, cap_walk};
              hyperlat::TransferCertificate cert =
                  hyperlat::transfer_salem(l, f, e, a, caps, require_chamber);
              return dump(hyperlat::certificate_to_json(cert));
          },
          py::arg("lattice"), py::arg("isometry"), py::arg("embedding"),
          py::arg("ample") = std::nullopt, py::arg("cap_order") = hyperlat::kDefaultOrderCap,
          py::arg("cap_walk") = hyperlat::kDefaultWalkCap, py::arg("require_chamber") = true);

    m.def("verify_certificate", [](const std::string& cert) {
        json j = parse(cert, "certificate");
        std::string why;
        const bool ok = hyperlat::verify_certificate(j, &why);
        json out{{"valid", ok}};
        out["reason"] = ok ? json(nullptr) : json(why);
        return dump(out);
    });
}
