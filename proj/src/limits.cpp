#include <mimlab/error.hpp>
#include <mimlab/limits.hpp>

#include <charconv>
#include <sstream>

namespace mimlab
{
    auto apply_limit_overrides(Limits limits, const std::string & spec) -> Limits
    {
        std::istringstream in(spec);
        std::string item;
        while (std::getline(in, item, ',')) {
            if (item.empty())
                continue;
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw InvalidParameter("limit override '" + item + "' is not key=value");
            auto key = item.substr(0, eq);
            auto text = item.substr(eq + 1);
            int value = 0;
            auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || end != text.data() + text.size() || value < 0)
                throw InvalidParameter("bad value in limit override '" + item + "'");
            if (key == "exact")
                limits.exact = value;
            else if (key == "tw" || key == "treewidth")
                limits.treewidth = value;
            else if (key == "cycle")
                limits.cycle = value;
            else if (key == "upper")
                limits.upper = value;
            else
                throw InvalidParameter("unknown limit '" + key + "'");
        }
        return limits;
    }
}
