#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace inlim
{
    using Element = std::uint32_t;

    /// Membership flags over the elements of one finite set.
    using ElementMask = std::vector<std::uint8_t>;

    /// A finite set {0, ..., size-1}. Labels are presentation only.
    class FinSetObj
    {
    private:
        std::size_t _size = 0;
        std::optional<std::vector<std::string>> _labels;

    public:
        FinSetObj() = default;
        explicit FinSetObj(std::size_t size) : _size(size) {}

        /// Throws InvalidInput on duplicate labels.
        explicit FinSetObj(std::vector<std::string> labels);

        [[nodiscard]] auto size() const -> std::size_t { return _size; }
        [[nodiscard]] auto empty() const -> bool { return _size == 0; }
        [[nodiscard]] auto labelled() const -> bool { return _labels.has_value(); }
        [[nodiscard]] auto labels() const -> const std::optional<std::vector<std::string>> & { return _labels; }

        /// The label of x, or its decimal index if unlabelled.
        [[nodiscard]] auto name(Element x) const -> std::string;

        /// Index of a label; nullopt if unlabelled or absent.
        [[nodiscard]] auto find(const std::string & label) const -> std::optional<Element>;

        auto operator==(const FinSetObj &) const -> bool = default;
    };

    /// A total function between finite sets, stored as a dense table.
    class FinFn
    {
    private:
        std::size_t _target_size = 0;
        std::vector<Element> _table;

    public:
        FinFn() = default;

        /// Throws InvalidInput if some entry is >= target_size.
        FinFn(std::size_t target_size, std::vector<Element> table);

        [[nodiscard]] static auto identity(std::size_t size) -> FinFn;

        [[nodiscard]] auto source_size() const -> std::size_t { return _table.size(); }
        [[nodiscard]] auto target_size() const -> std::size_t { return _target_size; }
        [[nodiscard]] auto table() const -> std::span<const Element> { return _table; }
        [[nodiscard]] auto operator()(Element x) const -> Element { return _table[x]; }

        auto operator==(const FinFn &) const -> bool = default;
    };

    /// then(first): apply `first`, then `then`. Throws InvalidInput if
    /// first.target_size() != then.source_size().
    [[nodiscard]] auto compose(const FinFn & first, const FinFn & then) -> FinFn;

    /// marked[t] iff t = f(s) for some s.
    [[nodiscard]] auto image(const FinFn & f) -> ElementMask;

    /// Image of the masked part of the source.
    [[nodiscard]] auto image(const FinFn & f, std::span<const std::uint8_t> source_mask) -> ElementMask;
}
