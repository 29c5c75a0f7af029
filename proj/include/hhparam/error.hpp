#pragma once

#include <stdexcept>
#include <string>

namespace hhparam {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6, edge lists, obstruction files, CLI values).
class parse_error : public error {
   public:
    enum class kind {
        bad_header,
        truncated,
        trailing_garbage,
        bad_data_byte,
        too_many_vertices,
        count_mismatch,
        endpoint_out_of_range,
        self_loop,
        syntax,
    };
    parse_error(kind k, const std::string &msg) : error(msg), kind_(k) {}
    kind which() const { return kind_; }

   private:
    kind kind_;
};

/// An exact subsolver was asked to handle a graph above its configured cap.
class size_error : public error {
   public:
    size_error(const std::string &what, int n, int cap)
        : error(what + ": " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap)), n_(n), cap_(cap) {}
    int n() const { return n_; }
    int cap() const { return cap_; }

   private:
    int n_;
    int cap_;
};

/// A documented precondition of an operation does not hold.
class precondition_error : public error {
   public:
    enum class kind {
        not_an_oct,
        not_independent,
        improper_coloring,
        overlapping_sets,
        wrong_oracle_variant,
        not_a_deletion_set,
        deletion_set_too_large,
        invalid_parameters,
        invalid_graph,
    };
    precondition_error(kind k, const std::string &msg) : error(msg), kind_(k) {}
    kind which() const { return kind_; }

   private:
    kind kind_;
};

}  // namespace hhparam
