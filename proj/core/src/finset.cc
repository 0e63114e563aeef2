#include <inlim/errors.hh>
#include <inlim/finset.hh>

#include <algorithm>
#include <numeric>
#include <unordered_set>

using std::nullopt;
using std::optional;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace inlim
{
    FinSetObj::FinSetObj(vector<string> labels) :
        _size(labels.size())
    {
        std::unordered_set<string> seen;
        for (auto & l : labels)
            if (! seen.insert(l).second)
                throw InvalidInput("duplicate element label '" + l + "'");
        _labels = std::move(labels);
    }

    auto FinSetObj::name(Element x) const -> string
    {
        if (_labels)
            return (*_labels)[x];
        return to_string(x);
    }

    auto FinSetObj::find(const string & label) const -> optional<Element>
    {
        if (! _labels)
            return nullopt;
        auto it = std::find(_labels->begin(), _labels->end(), label);
        if (it == _labels->end())
            return nullopt;
        return static_cast<Element>(it - _labels->begin());
    }

    FinFn::FinFn(size_t target_size, vector<Element> table) :
        _target_size(target_size),
        _table(std::move(table))
    {
        for (size_t i = 0; i < _table.size(); ++i)
            if (_table[i] >= _target_size)
                throw InvalidInput("function entry " + to_string(i) + " maps to " + to_string(_table[i]) +
                    ", outside a target of size " + to_string(_target_size));
    }

    auto FinFn::identity(size_t size) -> FinFn
    {
        vector<Element> table(size);
        std::iota(table.begin(), table.end(), Element{0});
        return FinFn(size, std::move(table));
    }

    auto compose(const FinFn & first, const FinFn & then) -> FinFn
    {
        if (first.target_size() != then.source_size())
            throw InvalidInput("cannot compose: target of size " + to_string(first.target_size()) +
                " feeds a source of size " + to_string(then.source_size()));
        vector<Element> table(first.source_size());
        for (size_t i = 0; i < table.size(); ++i)
            table[i] = then(first(static_cast<Element>(i)));
        return FinFn(then.target_size(), std::move(table));
    }

    auto image(const FinFn & f) -> ElementMask
    {
        ElementMask marked(f.target_size(), 0);
        for (auto t : f.table())
            marked[t] = 1;
        return marked;
    }

    auto image(const FinFn & f, std::span<const std::uint8_t> source_mask) -> ElementMask
    {
        ElementMask marked(f.target_size(), 0);
        auto table = f.table();
        for (size_t i = 0; i < table.size(); ++i)
            if (source_mask[i])
                marked[table[i]] = 1;
        return marked;
    }
}
