#pragma once

#include <stdexcept>
#include <string>

namespace cocycle {

/// Base class for all validation failures raised by this library.
/// The CLI maps these to exit code 2; messages carry the offending indices.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

class NotClosed final : public ValidationError {
public:
    NotClosed(int row, int col, int value)
        : ValidationError("NotClosed: table[" + std::to_string(row) + "][" +
                          std::to_string(col) + "] = " + std::to_string(value) +
                          " is out of range") {}
};

class NoIdentity final : public ValidationError {
public:
    NoIdentity() : ValidationError("NoIdentity: no two-sided identity element exists") {}
};

class NotAssociative final : public ValidationError {
public:
    NotAssociative(int a, int b, int c)
        : ValidationError("NotAssociative: (a*b)*c != a*(b*c) for (a,b,c) = (" +
                          std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ")") {}
};

class MissingInverse final : public ValidationError {
public:
    explicit MissingInverse(int element)
        : ValidationError("MissingInverse: element " + std::to_string(element) +
                          " has no two-sided inverse") {}
};

class NotASubgroup final : public ValidationError {
public:
    NotASubgroup(const std::string& reason, int a, int b)
        : ValidationError("NotASubgroup: " + reason + " (witness " + std::to_string(a) +
                          (b >= 0 ? "," + std::to_string(b) : "") + ")") {}
};

class SizeLimitExceeded final : public ValidationError {
public:
    SizeLimitExceeded(const std::string& what, unsigned long long needed,
                      unsigned long long cap)
        : ValidationError("SizeLimitExceeded: " + what + " needs " + std::to_string(needed) +
                          " candidates, cap is " + std::to_string(cap)) {}
};

class NotAHomomorphism final : public ValidationError {
public:
    NotAHomomorphism(int x, int y)
        : ValidationError("NotAHomomorphism: image(x*y) != image(x)*image(y) for (x,y) = (" +
                          std::to_string(x) + "," + std::to_string(y) + ")") {}
};

class NotAnAutomorphism final : public ValidationError {
public:
    explicit NotAnAutomorphism(int sigma)
        : ValidationError("NotAnAutomorphism: image of acting element " +
                          std::to_string(sigma) + " is not a group automorphism") {}
};

class InconsistentGeneratorExtension final : public ValidationError {
public:
    explicit InconsistentGeneratorExtension(int element)
        : ValidationError("InconsistentGeneratorExtension: element " + std::to_string(element) +
                          " receives conflicting values along different generator words") {}
};

class UnderdeterminedAction final : public ValidationError {
public:
    explicit UnderdeterminedAction(int element)
        : ValidationError("UnderdeterminedAction: given images do not determine the image of "
                          "acting element " + std::to_string(element) +
                          " (keys are not a generating set)") {}
};

class NotInvariant final : public ValidationError {
public:
    NotInvariant(int sigma, int member)
        : ValidationError("NotInvariant: acting element " + std::to_string(sigma) +
                          " moves subgroup member " + std::to_string(member) +
                          " outside the subgroup") {}
};

class MismatchedActingGroup final : public ValidationError {
public:
    MismatchedActingGroup()
        : ValidationError("MismatchedActingGroup: the two actions have different acting groups") {}
};

class ActionMismatch final : public ValidationError {
public:
    ActionMismatch()
        : ValidationError("ActionMismatch: operands are defined over different actions") {}
};

class TargetNotAbelian final : public ValidationError {
public:
    TargetNotAbelian()
        : ValidationError("TargetNotAbelian: operation requires an abelian target group") {}
};

class NotEquivariant final : public ValidationError {
public:
    NotEquivariant(int sigma, int point)
        : ValidationError("NotEquivariant: f(sigma.x) != sigma.f(x) for (sigma,x) = (" +
                          std::to_string(sigma) + "," + std::to_string(point) + ")") {}
};

class NotACocycle final : public ValidationError {
public:
    NotACocycle(int s1, int s2)
        : ValidationError("NotACocycle: cocycle identity fails at (" + std::to_string(s1) +
                          "," + std::to_string(s2) + ")") {}
};

class NotNormal final : public ValidationError {
public:
    NotNormal(int g, int member)
        : ValidationError("NotNormal: conjugate of member " + std::to_string(member) +
                          " by " + std::to_string(g) + " leaves the subgroup") {}
};

class NotAWitness final : public ValidationError {
public:
    explicit NotAWitness(int sigma)
        : ValidationError("NotAWitness: claimed coboundary witness fails at acting element " +
                          std::to_string(sigma)) {}
};

class NotAnIsomorphism final : public ValidationError {
public:
    explicit NotAnIsomorphism(const std::string& reason)
        : ValidationError("NotAnIsomorphism: " + reason) {}
};

class LemmaViolation final : public ValidationError {
public:
    LemmaViolation(const std::string& identity, int b, int c, int d)
        : ValidationError("LemmaViolation: identity '" + identity + "' fails at (" +
                          std::to_string(b) + "," + std::to_string(c) + "," +
                          std::to_string(d) + ")") {}
};

class BaseMismatch final : public ValidationError {
public:
    BaseMismatch() : ValidationError("BaseMismatch: forms live over different base actions") {}
};

class NotRegular final : public ValidationError {
public:
    NotRegular(const std::string& reason, int x, int y)
        : ValidationError("NotRegular: " + reason + " (witness " + std::to_string(x) + "," +
                          std::to_string(y) + ")") {}
};

class IntertwineFailure final : public ValidationError {
public:
    IntertwineFailure(int sigma, int point)
        : ValidationError("IntertwineFailure: f(sigma(m)) != sigma*f(m) at (sigma,m) = (" +
                          std::to_string(sigma) + "," + std::to_string(point) + ")") {}
};

} // namespace cocycle
