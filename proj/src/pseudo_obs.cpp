#include "specmeasure/pseudo_obs.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "specmeasure/errors.hpp"
#include "specmeasure/text_format.hpp"

namespace specmeasure {

namespace {

// Ranks of one column; returns true when the column has ties.
bool rank_column(const BivariateSample& sample, Eigen::Index col, RankMatrix& ranks) {
    const Eigen::Index n = sample.rows();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return sample(a, col) < sample(b, col);
    });
    bool ties = false;
    Eigen::Index start = 0;
    while (start < n) {
        Eigen::Index stop = start + 1;
        while (stop < n && sample(order[stop], col) == sample(order[start], col)) ++stop;
        if (stop - start > 1) ties = true;
        // Every member of the group [start, stop) has `stop` values <= itself.
        for (Eigen::Index t = start; t < stop; ++t) ranks(order[t], col) = stop;
        start = stop;
    }
    return ties;
}

}  // namespace

PseudoObservations pseudo_observations(const BivariateSample& sample) {
    const Eigen::Index n = sample.rows();
    if (n < 1) throw InputError("sample is empty");
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < 2; ++j)
            if (!std::isfinite(sample(i, j)))
                throw InputError("non-finite value at row " + std::to_string(i + 1) +
                                 ", column " + std::to_string(j + 1));

    PseudoObservations out;
    out.ranks.resize(n, 2);
    const bool t0 = rank_column(sample, 0, out.ranks);
    const bool t1 = rank_column(sample, 1, out.ranks);
    out.ties = t0 || t1;
    out.u = ((n + 1) - out.ranks.array()).cast<double>() / static_cast<double>(n);
    return out;
}

BivariateSample read_sample(std::istream& in) {
    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++lineno;
        const auto body = text::trim(line);
        if (body.empty()) continue;
        const auto fields = text::split_fields(body);
        const bool header_candidate = first_content;
        first_content = false;
        if (header_candidate && !text::parse_double(fields.front())) continue;
        if (fields.size() != 2)
            throw ParseError(lineno, "expected 2 fields, found " + std::to_string(fields.size()));
        for (const auto f : fields) {
            const auto v = text::parse_double(f);
            if (!v) throw ParseError(lineno, "non-numeric field '" + std::string(text::trim(f)) + "'");
            values.push_back(*v);
        }
    }
    if (values.empty()) throw InputError("no data rows");
    const auto n = static_cast<Eigen::Index>(values.size() / 2);
    return Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, 2, Eigen::RowMajor>>(values.data(), n, 2);
}

BivariateSample read_sample(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return read_sample(in);
}

void write_sample(std::ostream& out, const BivariateSample& sample) {
    out << "x1,x2\n";
    for (Eigen::Index i = 0; i < sample.rows(); ++i)
        out << text::format_double(sample(i, 0)) << ',' << text::format_double(sample(i, 1)) << '\n';
}

}  // namespace specmeasure
