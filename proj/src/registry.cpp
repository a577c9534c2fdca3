#include "kblocked/constructions.hpp"

#include "kblocked/error.hpp"

#include <map>

namespace kblocked {

namespace {

struct Entry
{
    const char* name;
    // x, y, colour
    std::vector<std::array<long, 3>> points;
};

const std::vector<Entry>& entries()
{
    static const std::vector<Entry> table = {
        {"K11", {{0, 0, 0}, {1, 0, 1}}},
        {"K12", {{0, 0, 0}, {1, 0, 1}, {2, 0, 0}}},
        {"K111", {{0, 0, 0}, {0, 1, 1}, {1, 0, 2}}},
        {"K112", {{0, 0, 0}, {1, 0, 1}, {1, 1, 2}, {2, 0, 0}}},
        {"K122", {{0, 0, 0}, {0, 2, 1}, {1, 1, 2}, {2, 0, 1}, {2, 2, 0}}},
        {"K222", {{0, 0, 0}, {0, 4, 1}, {1, 1, 2}, {2, 2, 0}, {3, 1, 1}, {4, 1, 2}}},
        {"K4221", {{0, 0, 0}, {0, 1, 1}, {0, 2, 0}, {1, 0, 2}, {1, 1, 3},
                   {1, 2, 2}, {2, 0, 0}, {2, 1, 1}, {2, 2, 0}}},
        {"K4222", {{0, 0, 0}, {0, 1, 1}, {0, 6, 0}, {1, 1, 2}, {1, 4, 3},
                   {1, 5, 2}, {2, 2, 0}, {4, 1, 1}, {5, 0, 3}, {6, 0, 0}}},
        {"K3333", {{0, 1, 0}, {1, 2, 1}, {1, 5, 2}, {2, 2, 3}, {2, 3, 0},
                   {2, 4, 3}, {3, 1, 2}, {3, 2, 1}, {3, 3, 2}, {4, 0, 3},
                   {4, 3, 0}, {5, 4, 1}}},
        {"K3333B", {{0, 0, 0}, {1, 2, 1}, {1, 3, 2}, {1, 6, 1}, {2, 3, 3},
                    {2, 4, 0}, {2, 5, 3}, {3, 3, 2}, {3, 4, 1}, {3, 5, 2},
                    {4, 4, 0}, {6, 5, 3}}},
    };
    return table;
}

} // namespace

const std::vector<std::string>& canonical_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& e : entries()) out.emplace_back(e.name);
        return out;
    }();
    return names;
}

ColouredPointSet canonical(const std::string& name)
{
    for (const auto& e : entries()) {
        if (name != e.name) continue;
        std::vector<RationalPoint> pts;
        std::vector<int> colours;
        for (const auto& [x, y, c] : e.points) {
            pts.push_back(RationalPoint{Rational(x), Rational(y)});
            colours.push_back(static_cast<int>(c));
        }
        return ColouredPointSet(PointConfig(2, std::move(pts)), std::move(colours));
    }
    throw PreconditionError("unknown canonical configuration '" + name + "'");
}

} // namespace kblocked
