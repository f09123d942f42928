#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hecke0 {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (partitions, permutations, row sets, spec files).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A value violates the invariants of its type (not a partition, index out of range, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Two tableaux whose smallest differing letter sits in cells that are not
/// comparable under "weakly northwest".
class IncomparableCells : public Error {
public:
    using Error::Error;
};

/// The combinatorial Specht action sent e_T to e_{s_i T} with s_i T non-standard.
class NonStandardImage : public Error {
public:
    using Error::Error;
};

/// Exact linear solve hit a rank deficiency or an inconsistent system.
class SolveFailure : public Error {
public:
    using Error::Error;
};

/// Generators of a serialized module fail the Coxeter relations, or an induced
/// 0-Hecke action fails its relations.
class RelationViolation : public Error {
public:
    explicit RelationViolation(std::vector<std::string> witnesses);
    const std::vector<std::string>& witnesses() const noexcept { return witnesses_; }

private:
    std::vector<std::string> witnesses_;
};

/// The character-theoretic decomposition produced non-integral or negative multiplicities.
class NonIntegralDecomposition : public Error {
public:
    using Error::Error;
};

/// The two coinvariant classifications (exponent rule, reduction rule) disagree.
class ClassificationMismatch : public Error {
public:
    using Error::Error;
};

/// A column of a serialized generator fits none of the three deformation cases.
class CaseViolation : public Error {
public:
    explicit CaseViolation(std::vector<std::string> witnesses);
    const std::vector<std::string>& witnesses() const noexcept { return witnesses_; }

private:
    std::vector<std::string> witnesses_;
};

/// The composition-series characteristic was requested on a module whose
/// moves are not strictly downward.
class NotTriangular : public Error {
public:
    using Error::Error;
};

}  // namespace hecke0
