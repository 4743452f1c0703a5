#pragma once

#include <stdexcept>
#include <string>

namespace surplus {

enum class Errc {
    ok = 0,
    invalid_argument,
    self_loop,
    duplicate_edge,
    vertex_out_of_range,
    isolated_vertex,
    not_an_edge,
    length_mismatch,
    not_sparse,
    not_regular,
    not_prime,
    too_large,
    no_convergence,
    arcsin_domain,
    parse,
    io,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, std::string msg) { throw Error(code, std::move(msg)); }

inline void require(bool cond, Errc code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

}  // namespace surplus
