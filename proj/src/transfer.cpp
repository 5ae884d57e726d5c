#include "hyperlat/transfer.hpp"

#include <filesystem>
#include <fstream>

#include <openssl/evp.h>

#include "hyperlat/errors.hpp"
#include "hyperlat/exact_core.hpp"
#include "hyperlat/json_io.hpp"
#include "hyperlat/version.hpp"

namespace hyperlat {

namespace {

Int wall_bound(const Lattice& l, const LatticeVector& v, const LatticeVector& w) {
    const Int p = inner(l, v, v);
    const Int q = inner(l, w, w);
    const Int s = inner(l, v, w);
    return 2 * (s * s - p * q);
}

bool fail(std::string* why, const std::string& reason) {
    if (why) {
        *why = reason;
    }
    return false;
}

IntMatrix column(const IntVec& v) {
    IntMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        m.at(i, 0) = v[i];
    }
    return m;
}

}  // namespace

AlignResult align_interior(const Embedding& e, const LatticeVector& ample,
                           const std::optional<LatticeVector>& base, long walk_cap) {
    const Lattice& l = e.ambient;
    if (ample.owner != l.label) {
        throw input_error("OwnerMismatch",
                          "interior vector lives in '" + ample.owner + "', embedding in '" +
                              l.label + "'");
    }
    if (!is_hyperbolic(l)) {
        throw input_error("NotHyperbolic", "alignment needs signature (1, n-1)");
    }
    if (!(inner(l, ample, ample) > 0)) {
        throw input_error("NotInteriorVector", "alignment needs a positive-norm vector");
    }

    RatMatrix x = rat_solve(e.basis, column(ample.coords));
    Int s = 1;
    for (std::size_t i = 0; i < x.rows(); ++i) {
        Int den = x.at(i, 0).get_den();
        mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), den.get_mpz_t());
    }
    IntVec coords(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        coords[i] = Int(x.at(i, 0).get_num()) * (s / Int(x.at(i, 0).get_den()));
    }
    Lattice n = e.sub_lattice();
    LatticeVector ample_sub{n.label, coords};

    LatticeVector start = ample_sub;
    if (base) {
        if (base->owner != n.label) {
            throw input_error("OwnerMismatch",
                              "base point lives in '" + base->owner + "', expected '" + n.label + "'");
        }
        if (!(inner(n, *base, *base) > 0)) {
            throw input_error("NotInteriorVector", "base point needs positive norm");
        }
        if (!same_positive_cone(n, *base, ample_sub)) {
            throw input_error("ConeMismatch", "base point is in the opposite cone half");
        }
        start = *base;
    }
    WalkResult walk = chamber_walk(n, start, ample_sub, walk_cap);
    return AlignResult{s, ample_sub, walk.word, walk.end};
}

TransferCertificate transfer_salem(const Lattice& l, const Isometry& f, const Embedding& e,
                                   const std::optional<LatticeVector>& ample, const Caps& caps,
                                   bool require_chamber) {
    if (f.owner != l.label) {
        throw input_error("OwnerMismatch",
                          "isometry acts on '" + f.owner + "', lattice is '" + l.label + "'");
    }
    if (e.ambient.label != l.label || !(e.ambient.gram == l.gram)) {
        throw input_error("EmbeddingMismatch", "embedding does not sit in the given lattice");
    }

    TransferCertificate cert;
    cert.schema = kCertSchema;
    cert.tool_version = kToolVersion;
    cert.lattice = l;
    cert.basis = e.basis;
    cert.index = e.index;
    cert.f = f.matrix;

    auto [deg_f, rep_f] = salem_degree(l, f);
    cert.f_report = rep_f;

    std::optional<ChamberSection> chamber;
    if (ample) {
        const LatticeVector& a = *ample;
        if (a.owner != l.label) {
            throw input_error("OwnerMismatch", "interior vector owner is '" + a.owner + "'");
        }
        if (!is_hyperbolic(l)) {
            throw input_error("NotHyperbolic", "chamber checks need signature (1, n-1)");
        }
        if (!(inner(l, a, a) > 0)) {
            throw input_error("NotInteriorVector", "chamber checks need a positive-norm vector");
        }
        ChamberSection sec;
        sec.ample = a.coords;
        LatticeVector fa = apply(l, f, a);
        sec.ambient_wall_bound = wall_bound(l, a, fa);
        sec.ambient_fixed = same_positive_cone(l, a, fa) && same_chamber(l, a, fa);
        if (require_chamber && !sec.ambient_fixed) {
            throw math_error("ChamberViolation",
                             "isometry moves the chamber of the interior vector in '" + l.label + "'");
        }
        chamber = std::move(sec);
    }

    StabilizingPower sp = stabilizing_power(e, f, caps.order);
    cert.m = sp.m;
    Isometry h = isometry_power(l, f, static_cast<unsigned long>(sp.m));
    cert.h = h.matrix;
    cert.h_sub = sp.h.matrix;

    Lattice n = e.sub_lattice();
    auto [deg_h, rep_h] = salem_degree(n, sp.h);
    cert.h_report = rep_h;
    if (deg_h != deg_f) {
        throw math_error("SalemAssertionFailure",
                         "transfer changed the Salem degree from " + std::to_string(deg_f) +
                             " to " + std::to_string(deg_h));
    }

    if (chamber) {
        AlignResult al = align_interior(e, *ample, std::nullopt, caps.walk);
        ChamberSection& sec = *chamber;
        sec.scaling = al.scaling;
        sec.ample_sub = al.ample_sub.coords;
        sec.base_sub = al.ample_sub.coords;
        for (const Root& r : al.word.roots) {
            sec.word.push_back(r.coords);
        }
        sec.walked_base = al.walked_base.coords;
        LatticeVector ha = apply(n, sp.h, al.ample_sub);
        sec.sub_wall_bound = wall_bound(n, al.ample_sub, ha);
        sec.sub_fixed =
            same_positive_cone(n, al.ample_sub, ha) && same_chamber(n, al.ample_sub, ha);
        if (require_chamber && !sec.sub_fixed) {
            throw math_error("ChamberViolation",
                             "stabilized power moves the chamber of the transferred vector");
        }
    }
    cert.chamber = std::move(chamber);
    cert.content_hash = certificate_hash(certificate_to_json(cert));
    return cert;
}

nlohmann::json certificate_to_json(const TransferCertificate& c) {
    nlohmann::json j{
        {"schema", c.schema},
        {"tool_version", c.tool_version},
        {"lattice", jsonio::lattice_json(c.lattice)},
        {"basis", jsonio::matrix_json(c.basis)},
        {"index", jsonio::int_json(c.index)},
        {"f", jsonio::matrix_json(c.f)},
        {"f_report", jsonio::report_json(c.f_report)},
        {"m", c.m},
        {"h", jsonio::matrix_json(c.h)},
        {"h_sub", jsonio::matrix_json(c.h_sub)},
        {"h_report", jsonio::report_json(c.h_report)},
        {"content_hash", c.content_hash},
    };
    if (c.chamber) {
        const ChamberSection& s = *c.chamber;
        nlohmann::json word = nlohmann::json::array();
        for (const IntVec& r : s.word) {
            word.push_back(jsonio::vec_json(r));
        }
        j["chamber"] = nlohmann::json{
            {"ample", jsonio::vec_json(s.ample)},
            {"scaling", jsonio::int_json(s.scaling)},
            {"ample_sub", jsonio::vec_json(s.ample_sub)},
            {"base_sub", jsonio::vec_json(s.base_sub)},
            {"word", std::move(word)},
            {"walked_base", jsonio::vec_json(s.walked_base)},
            {"ambient_wall_bound", jsonio::int_json(s.ambient_wall_bound)},
            {"sub_wall_bound", jsonio::int_json(s.sub_wall_bound)},
            {"ambient_fixed", s.ambient_fixed},
            {"sub_fixed", s.sub_fixed},
        };
    } else {
        j["chamber"] = nullptr;
    }
    return j;
}

TransferCertificate certificate_from_json(const nlohmann::json& j) {
    try {
        TransferCertificate c;
        c.schema = jsonio::string_field(j, "schema");
        if (c.schema != kCertSchema) {
            throw input_error("MalformedCertificate", "unsupported schema '" + c.schema + "'");
        }
        c.tool_version = jsonio::string_field(j, "tool_version");
        c.lattice = jsonio::json_lattice(jsonio::field(j, "lattice"));
        c.basis = jsonio::json_matrix(jsonio::field(j, "basis"));
        c.index = jsonio::json_int(jsonio::field(j, "index"));
        c.f = jsonio::json_matrix(jsonio::field(j, "f"));
        c.f_report = jsonio::json_report(jsonio::field(j, "f_report"));
        c.m = jsonio::json_int(jsonio::field(j, "m")).get_si();
        c.h = jsonio::json_matrix(jsonio::field(j, "h"));
        c.h_sub = jsonio::json_matrix(jsonio::field(j, "h_sub"));
        c.h_report = jsonio::json_report(jsonio::field(j, "h_report"));
        const std::size_t r = c.lattice.rank();
        for (const IntMatrix* m : {&c.basis, &c.f, &c.h, &c.h_sub}) {
            if (m->rows() != r || m->cols() != r) {
                throw input_error("MalformedCertificate", "matrix size does not match the rank");
            }
        }
        const nlohmann::json& ch = jsonio::field(j, "chamber");
        if (!ch.is_null()) {
            ChamberSection s;
            s.ample = jsonio::json_vec(jsonio::field(ch, "ample"));
            s.scaling = jsonio::json_int(jsonio::field(ch, "scaling"));
            s.ample_sub = jsonio::json_vec(jsonio::field(ch, "ample_sub"));
            s.base_sub = jsonio::json_vec(jsonio::field(ch, "base_sub"));
            const nlohmann::json& word = jsonio::field(ch, "word");
            if (!word.is_array()) {
                throw input_error("MalformedCertificate", "'word' must be an array");
            }
            for (const auto& w : word) {
                s.word.push_back(jsonio::json_vec(w));
            }
            s.walked_base = jsonio::json_vec(jsonio::field(ch, "walked_base"));
            s.ambient_wall_bound = jsonio::json_int(jsonio::field(ch, "ambient_wall_bound"));
            s.sub_wall_bound = jsonio::json_int(jsonio::field(ch, "sub_wall_bound"));
            const nlohmann::json& af = jsonio::field(ch, "ambient_fixed");
            const nlohmann::json& sf = jsonio::field(ch, "sub_fixed");
            if (!af.is_boolean() || !sf.is_boolean()) {
                throw input_error("MalformedCertificate", "chamber verdicts must be booleans");
            }
            s.ambient_fixed = af.get<bool>();
            s.sub_fixed = sf.get<bool>();
            c.chamber = std::move(s);
        }
        c.content_hash = jsonio::string_field(j, "content_hash");
        return c;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::input) {
            throw input_error("MalformedCertificate", e.what());
        }
        throw;
    }
}

std::string canonical_dump(const nlohmann::json& j) {
    return j.dump();
}

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw math_error("DigestFailure", "sha256 computation failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xf]);
    }
    return out;
}

std::string certificate_hash(nlohmann::json cert) {
    cert.erase("content_hash");
    return sha256_hex(canonical_dump(cert));
}

void write_certificate_file(const nlohmann::json& cert, const std::string& path) {
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw input_error("FileWrite", "cannot open '" + tmp.string() + "' for writing");
        }
        out << canonical_dump(cert) << "\n";
        out.flush();
        if (!out) {
            throw input_error("FileWrite", "short write to '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        throw input_error("FileWrite", "cannot move certificate into place: " + ec.message());
    }
}

bool verify_certificate(const nlohmann::json& j, std::string* why, const Caps& caps) {
    TransferCertificate c = certificate_from_json(j);
    if (certificate_hash(j) != c.content_hash) {
        return fail(why, "content hash mismatch");
    }
    try {
        Embedding e = make_embedding(c.lattice, c.basis);
        if (e.index != c.index) {
            return fail(why, "index does not match |det basis|");
        }
        Isometry f = verify_isometry(c.lattice, c.f);
        if (c.m < 1) {
            return fail(why, "m must be positive");
        }
        Isometry h = isometry_power(c.lattice, f, static_cast<unsigned long>(c.m));
        if (!(h.matrix == c.h)) {
            return fail(why, "h is not f^m");
        }
        RatMatrix x = rat_solve(c.basis, c.h * c.basis);
        IntMatrix hs(x.rows(), x.cols());
        if (!x.to_int(hs)) {
            return fail(why, "f^m does not descend to the sublattice");
        }
        if (!(hs == c.h_sub)) {
            return fail(why, "h_sub is not basis^-1 * h * basis");
        }
        Lattice n = e.sub_lattice();
        Isometry hsub = verify_isometry(n, c.h_sub);

        if (e.index > 1) {
            const long bound = order_mod(c.f, e.index, caps.order);
            if (c.m > bound) {
                return fail(why, "m exceeds the order of f in the quotient");
            }
        } else if (c.m != 1) {
            return fail(why, "unimodular basis change forces m = 1");
        }
        Isometry fk = f;
        for (long k = 1; k < c.m; ++k) {
            if (descends_to(e, fk)) {
                return fail(why, "m is not minimal: f^" + std::to_string(k) + " already descends");
            }
            fk = compose(c.lattice, fk, f);
        }

        auto [deg_f, rep_f] = salem_degree(c.lattice, f);
        if (!reports_equal(rep_f, c.f_report)) {
            return fail(why, "factor report of f does not recompute");
        }
        auto [deg_h, rep_h] = salem_degree(n, hsub);
        if (!reports_equal(rep_h, c.h_report)) {
            return fail(why, "factor report of h does not recompute");
        }
        if (deg_f != deg_h) {
            return fail(why, "Salem degrees differ across the transfer");
        }

        if (c.chamber) {
            const ChamberSection& s = *c.chamber;
            if (s.ample.size() != c.lattice.rank()) {
                return fail(why, "chamber: interior vector has the wrong length");
            }
            LatticeVector a{c.lattice.label, s.ample};
            if (!(inner(c.lattice, a, a) > 0)) {
                return fail(why, "chamber: interior vector is not interior");
            }
            RatMatrix coords = rat_solve(c.basis, column(s.ample));
            Int scale = 1;
            for (std::size_t i = 0; i < coords.rows(); ++i) {
                Int den = coords.at(i, 0).get_den();
                mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
            }
            if (scale != s.scaling) {
                return fail(why, "chamber: scaling is not the minimal denominator");
            }
            if (s.ample_sub.size() != n.rank() || s.base_sub.size() != n.rank() ||
                s.walked_base.size() != n.rank()) {
                return fail(why, "chamber: sublattice vectors have the wrong length");
            }
            for (std::size_t i = 0; i < coords.rows(); ++i) {
                if (Rat(s.ample_sub[i]) != coords.at(i, 0) * Rat(scale)) {
                    return fail(why, "chamber: sublattice image mismatch");
                }
            }
            LatticeVector asub{n.label, s.ample_sub};
            LatticeVector base{n.label, s.base_sub};
            if (!(inner(n, base, base) > 0)) {
                return fail(why, "chamber: base point is not interior");
            }
            if (!same_positive_cone(n, base, asub)) {
                return fail(why, "chamber: base point is in the opposite cone half");
            }
            WeylWord word;
            for (const IntVec& r : s.word) {
                word.roots.push_back(make_root(n, r));
            }
            LatticeVector walked = apply_word(n, word, base);
            if (walked.coords != s.walked_base) {
                return fail(why, "chamber: walked base does not replay");
            }
            if (!separating_roots(n, walked, asub).empty()) {
                return fail(why, "chamber: walked base is separated from the target");
            }
            LatticeVector fa = apply(c.lattice, f, a);
            if (wall_bound(c.lattice, a, fa) != s.ambient_wall_bound) {
                return fail(why, "chamber: ambient wall bound mismatch");
            }
            bool ambient = same_positive_cone(c.lattice, a, fa) && same_chamber(c.lattice, a, fa);
            if (ambient != s.ambient_fixed) {
                return fail(why, "chamber: ambient verdict does not recompute");
            }
            LatticeVector ha = apply(n, hsub, asub);
            if (wall_bound(n, asub, ha) != s.sub_wall_bound) {
                return fail(why, "chamber: sublattice wall bound mismatch");
            }
            bool sub = same_positive_cone(n, asub, ha) && same_chamber(n, asub, ha);
            if (sub != s.sub_fixed) {
                return fail(why, "chamber: sublattice verdict does not recompute");
            }
        }
        return true;
    } catch (const Error& err) {
        if (err.kind() == ErrorKind::cap_exceeded) {
            throw;
        }
        return fail(why, err.what());
    }
}

}  // namespace hyperlat
