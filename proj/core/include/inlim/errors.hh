#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace inlim
{
    /// Malformed input: bad sizes, out-of-range indices, non-simple shapes,
    /// unparseable JSON. Carries the individual violations when there are several.
    class InvalidInput : public std::runtime_error
    {
    private:
        std::vector<std::string> _violations;

    public:
        explicit InvalidInput(const std::string & message);
        InvalidInput(const std::string & message, std::vector<std::string> violations);

        [[nodiscard]] auto violations() const -> const std::vector<std::string> &;
    };

    /// An operation was handed a shape it does not support (a cycle where a
    /// forest is required, edges where a discrete shape is required).
    class UnsupportedShape : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// No feedback vertex set within the allowed budget, or a supplied one
    /// that leaves a cycle behind.
    class FeedbackVertexSetError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Brute-force enumeration would exceed its configured cap.
    class CapExceeded : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}
