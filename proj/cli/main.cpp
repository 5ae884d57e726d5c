#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "hyperlat/json_io.hpp"
#include "hyperlat/quotient.hpp"
#include "hyperlat/salem.hpp"
#include "hyperlat/transfer.hpp"
#include "hyperlat/version.hpp"
#include "hyperlat/weyl.hpp"

namespace {

using hyperlat::Int;
using hyperlat::IntVec;
using nlohmann::json;

struct Options {
    long cap_order = hyperlat::kDefaultOrderCap;
    long cap_walk = hyperlat::kDefaultWalkCap;
    bool no_chamber = false;
    bool quiet = false;
    bool log_json = false;
    std::string output;
};

struct Logger {
    const Options* opts = nullptr;

    void info(const std::string& msg,
              std::initializer_list<std::pair<const char*, std::string>> kv = {}) const {
        if (opts->quiet) {
            return;
        }
        if (opts->log_json) {
            json line{{"level", "info"}, {"msg", msg}};
            for (const auto& [k, v] : kv) {
                line[k] = v;
            }
            std::cerr << line.dump() << "\n";
        } else {
            std::cerr << "level=info msg=\"" << msg << "\"";
            for (const auto& [k, v] : kv) {
                std::cerr << " " << k << "=" << v;
            }
            std::cerr << "\n";
        }
    }
};

// Inputs resolve against the working directory first, then $HYPERLAT_FIXTURES,
// then the bundled fixture directory.
std::string resolve_input(const std::string& arg) {
    namespace fs = std::filesystem;
    if (fs::exists(arg)) {
        return arg;
    }
    if (const char* env = std::getenv("HYPERLAT_FIXTURES")) {
        fs::path p = fs::path(env) / arg;
        if (fs::exists(p)) {
            return p.string();
        }
    }
#ifdef HYPERLAT_FIXTURE_DIR
    {
        fs::path p = fs::path(HYPERLAT_FIXTURE_DIR) / arg;
        if (fs::exists(p)) {
            return p.string();
        }
    }
#endif
    throw hyperlat::input_error("FileNotFound", "cannot find input '" + arg + "'");
}

json load_json(const std::string& arg) {
    const std::string path = resolve_input(arg);
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw hyperlat::input_error("FileRead", "cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw hyperlat::input_error("MalformedInput", path + ": " + e.what());
    }
}

// Inline JSON array, or @path to a file holding one.
IntVec parse_vector_arg(const std::string& arg) {
    json j;
    if (!arg.empty() && arg[0] == '@') {
        j = load_json(arg.substr(1));
    } else {
        try {
            j = json::parse(arg);
        } catch (const json::exception& e) {
            throw hyperlat::input_error("MalformedInput", std::string("vector argument: ") + e.what());
        }
    }
    return hyperlat::jsonio::json_vec(j);
}

Int parse_int_arg(const std::string& arg) {
    try {
        return hyperlat::jsonio::json_int(json(arg));
    } catch (const hyperlat::Error&) {
        throw hyperlat::input_error("MalformedInput", "not an integer: '" + arg + "'");
    }
}

void emit(const json& j) {
    std::cout << hyperlat::canonical_dump(j) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    Options opts;
    Logger log{&opts};

    CLI::App app{"exact arithmetic for hyperbolic lattices: Salem degrees, sublattice "
                 "transfers, and chamber certificates"};
    app.require_subcommand(1);
    app.set_version_flag("--version", hyperlat::kToolVersion);
    app.add_option("--cap-order", opts.cap_order, "iteration cap for quotient orders");
    app.add_option("--cap-walk", opts.cap_walk, "iteration cap for chamber walks");
    app.add_flag("--no-chamber", opts.no_chamber, "record chamber verdicts instead of requiring them");
    app.add_flag("--quiet", opts.quiet, "suppress progress logging");
    app.add_flag("--log-json", opts.log_json, "log to stderr as JSON lines");
    app.add_option("--output", opts.output, "also write the result to this path (atomic)");

    std::string lattice_arg, isometry_arg, embedding_arg, cert_arg, matrix_arg;
    std::string vector_arg, from_arg, to_arg, pairing_arg, modulus_arg, ample_arg;

    CLI::App* sig = app.add_subcommand("signature", "signature and parity of a lattice");
    sig->fallthrough();
    sig->add_option("--lattice", lattice_arg, "lattice JSON file")->required();
    sig->callback([&] {
        hyperlat::Lattice l = hyperlat::jsonio::json_lattice(load_json(lattice_arg));
        auto [plus, minus] = hyperlat::signature(l);
        emit(json{{"label", l.label},
                  {"rank", l.rank()},
                  {"signature", json::array({plus, minus})},
                  {"even", hyperlat::is_even(l)},
                  {"hyperbolic", hyperlat::is_hyperbolic(l)}});
    });

    CLI::App* sd = app.add_subcommand("salem-degree", "Salem degree and factor report of an isometry");
    sd->fallthrough();
    sd->add_option("--lattice", lattice_arg, "lattice JSON file")->required();
    sd->add_option("--isometry", isometry_arg, "isometry JSON file")->required();
    sd->callback([&] {
        hyperlat::Lattice l = hyperlat::jsonio::json_lattice(load_json(lattice_arg));
        hyperlat::Isometry f = hyperlat::jsonio::json_isometry(load_json(isometry_arg), l);
        auto [degree, report] = hyperlat::salem_degree(l, f);
        log.info("salem degree computed", {{"degree", std::to_string(degree)}});
        json out = hyperlat::jsonio::report_json(report);
        out["lattice"] = l.label;
        emit(out);
    });

    CLI::App* roots = app.add_subcommand("roots", "roots with a prescribed pairing against a vector");
    roots->fallthrough();
    roots->add_option("--lattice", lattice_arg, "lattice JSON file")->required();
    roots->add_option("--vector", vector_arg, "positive-norm vector, inline JSON or @file")->required();
    roots->add_option("--pairing", pairing_arg, "required pairing value")->required();
    roots->callback([&] {
        hyperlat::Lattice l = hyperlat::jsonio::json_lattice(load_json(lattice_arg));
        hyperlat::LatticeVector v{l.label, parse_vector_arg(vector_arg)};
        Int c = parse_int_arg(pairing_arg);
        auto found = hyperlat::roots_with_pairing(l, v, c);
        json arr = json::array();
        for (const auto& r : found) {
            arr.push_back(hyperlat::jsonio::vec_json(r.coords));
        }
        emit(json{{"lattice", l.label}, {"count", found.size()}, {"roots", std::move(arr)}});
    });

    CLI::App* walk = app.add_subcommand("walk", "reflect a vector into the chamber of another");
    walk->fallthrough();
    walk->add_option("--lattice", lattice_arg, "lattice JSON file")->required();
    walk->add_option("--from", from_arg, "vector to move, inline JSON or @file")->required();
    walk->add_option("--to", to_arg, "vector whose chamber is the target")->required();
    walk->callback([&] {
        hyperlat::Lattice l = hyperlat::jsonio::json_lattice(load_json(lattice_arg));
        hyperlat::LatticeVector v{l.label, parse_vector_arg(from_arg)};
        hyperlat::LatticeVector w{l.label, parse_vector_arg(to_arg)};
        hyperlat::WalkResult res = hyperlat::chamber_walk(l, v, w, opts.cap_walk);
        log.info("walk finished", {{"length", std::to_string(res.word.roots.size())}});
        json word = json::array();
        for (const auto& r : res.word.roots) {
            word.push_back(hyperlat::jsonio::vec_json(r.coords));
        }
        emit(json{{"lattice", l.label},
                  {"length", res.word.roots.size()},
                  {"word", std::move(word)},
                  {"end", hyperlat::jsonio::vec_json(res.end.coords)}});
    });

    CLI::App* om = app.add_subcommand("order-mod", "multiplicative order of a matrix modulo n");
    om->fallthrough();
    om->add_option("--matrix", matrix_arg, "matrix JSON file (bare rows or an isometry object)")
        ->required();
    om->add_option("--modulus", modulus_arg, "modulus, at least 2")->required();
    om->callback([&] {
        json j = load_json(matrix_arg);
        hyperlat::IntMatrix m = j.is_array() ? hyperlat::jsonio::json_matrix(j)
                                             : hyperlat::jsonio::json_matrix(
                                                   hyperlat::jsonio::field(j, "matrix"));
        Int n = parse_int_arg(modulus_arg);
        long order = hyperlat::order_mod(m, n, opts.cap_order);
        emit(json{{"modulus", hyperlat::jsonio::int_json(n)}, {"order", order}});
    });

    CLI::App* transfer = app.add_subcommand(
        "transfer", "restrict a stabilizing power to a finite-index sublattice, with certificate");
    transfer->fallthrough();
    transfer->add_option("--lattice", lattice_arg, "lattice JSON file")->required();
    transfer->add_option("--isometry", isometry_arg, "isometry JSON file")->required();
    transfer->add_option("--embedding", embedding_arg, "embedding JSON file")->required();
    transfer->add_option("--ample", ample_arg, "interior vector for chamber checks, inline or @file");
    transfer->callback([&] {
        hyperlat::Lattice l = hyperlat::jsonio::json_lattice(load_json(lattice_arg));
        hyperlat::Isometry f = hyperlat::jsonio::json_isometry(load_json(isometry_arg), l);
        hyperlat::Embedding e = hyperlat::jsonio::json_embedding(load_json(embedding_arg), l);
        std::optional<hyperlat::LatticeVector> ample;
        if (!ample_arg.empty()) {
            ample = hyperlat::LatticeVector{l.label, parse_vector_arg(ample_arg)};
        }
        hyperlat::Caps caps{opts.cap_order, opts.cap_walk};
        hyperlat::TransferCertificate cert =
            hyperlat::transfer_salem(l, f, e, ample, caps, !opts.no_chamber);
        json out = hyperlat::certificate_to_json(cert);
        log.info("transfer complete", {{"m", std::to_string(cert.m)},
                                       {"degree", std::to_string(cert.f_report.degree)},
                                       {"hash", cert.content_hash}});
        if (!opts.output.empty()) {
            hyperlat::write_certificate_file(out, opts.output);
            log.info("certificate written", {{"path", opts.output}});
        }
        emit(out);
    });

    CLI::App* verify = app.add_subcommand("verify", "recompute every claim in a certificate");
    verify->fallthrough();
    verify->add_option("--certificate", cert_arg, "certificate JSON file")->required();
    verify->callback([&] {
        json j = load_json(cert_arg);
        std::string why;
        hyperlat::Caps caps{opts.cap_order, opts.cap_walk};
        const bool ok = hyperlat::verify_certificate(j, &why, caps);
        json out{{"valid", ok}};
        out["reason"] = ok ? json(nullptr) : json(why);
        emit(out);
        if (!ok) {
            throw hyperlat::math_error("CertificateInvalid", why);
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const hyperlat::Error& e) {
        if (!opts.quiet) {
            if (opts.log_json) {
                std::cerr << json{{"level", "error"}, {"code", e.code()}, {"msg", e.what()}}.dump()
                          << "\n";
            } else {
                std::cerr << "level=error code=" << e.code() << " msg=\"" << e.what() << "\"\n";
            }
        }
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "level=error code=Internal msg=\"" << e.what() << "\"\n";
        return 1;
    }
    return 0;
}
