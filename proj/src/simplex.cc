#include <css/simplex.hh>

#include <stdexcept>

using namespace css;

using std::invalid_argument;
using std::string;
using std::vector;

auto css::rational_string(const Rational & r) -> string
{
    Rational c = r;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

auto css::parse_rational(const string & s) -> Rational
{
    Rational result;
    if (s.empty() || result.set_str(s, 10) != 0)
        throw invalid_argument("not a rational number: '" + s + "'");
    if (result.get_den() == 0)
        throw invalid_argument("zero denominator in '" + s + "'");
    result.canonicalize();
    return result;
}

namespace
{
    struct Tableau
    {
        int rows = 0;
        int cols = 0;
        vector<vector<Rational>> t;      // rows x (cols + 1), last entry is the right hand side
        vector<int> basis;
        vector<Rational> reduced;        // c_j - c_B B^-1 A_j
        Rational value;                  // c_B B^-1 b

        auto pivot(int r, int c) -> void
        {
            Rational p = t[r][c];
            for (auto & x : t[r])
                x /= p;
            for (int i = 0 ; i < rows ; ++i)
                if (i != r && t[i][c] != 0) {
                    Rational f = t[i][c];
                    for (int j = 0 ; j <= cols ; ++j)
                        if (t[r][j] != 0)
                            t[i][j] -= f * t[r][j];
                }
            if (reduced[c] != 0) {
                Rational f = reduced[c];
                for (int j = 0 ; j < cols ; ++j)
                    if (t[r][j] != 0)
                        reduced[j] -= f * t[r][j];
                value += f * t[r][cols];
            }
            basis[r] = c;
        }

        auto set_objective(const vector<Rational> & c) -> void
        {
            reduced = c;
            value = 0;
            for (int i = 0 ; i < rows ; ++i) {
                const Rational & cb = c[basis[i]];
                if (cb == 0)
                    continue;
                for (int j = 0 ; j < cols ; ++j)
                    if (t[i][j] != 0)
                        reduced[j] -= cb * t[i][j];
                value += cb * t[i][cols];
            }
        }

        // maximises; columns at or beyond `allowed` never enter. Returns false if unbounded.
        auto run(int allowed) -> bool
        {
            while (true) {
                int enter = -1;
                for (int j = 0 ; j < allowed ; ++j)
                    if (reduced[j] > 0) {
                        enter = j;
                        break;
                    }
                if (enter < 0)
                    return true;

                int leave = -1;
                Rational best;
                for (int i = 0 ; i < rows ; ++i)
                    if (t[i][enter] > 0) {
                        Rational ratio = t[i][cols] / t[i][enter];
                        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                            leave = i;
                            best = ratio;
                        }
                    }
                if (leave < 0)
                    return false;
                pivot(leave, enter);
            }
        }
    };
}

auto css::solve_lp(const LinearProgram & lp) -> LpSolution
{
    int nv = lp.variables;
    if (int(lp.objective.size()) != nv)
        throw invalid_argument("objective length does not match variable count");
    for (auto & c : lp.constraints)
        if (int(c.coeffs.size()) != nv)
            throw invalid_argument("constraint length does not match variable count");

    // normalise to nonnegative right hand sides
    vector<LinearConstraint> rows = lp.constraints;
    for (auto & r : rows)
        if (r.rhs < 0) {
            for (auto & x : r.coeffs)
                x = -x;
            r.rhs = -r.rhs;
            if (r.sense == Sense::le)
                r.sense = Sense::ge;
            else if (r.sense == Sense::ge)
                r.sense = Sense::le;
        }

    int m = int(rows.size());
    int slack_count = 0, artificial_count = 0;
    for (auto & r : rows) {
        if (r.sense != Sense::eq)
            ++slack_count;
        if (r.sense != Sense::le)
            ++artificial_count;
    }

    int first_slack = nv, first_artificial = nv + slack_count;
    Tableau tab;
    tab.rows = m;
    tab.cols = nv + slack_count + artificial_count;
    tab.t.assign(m, vector<Rational>(tab.cols + 1));
    tab.basis.assign(m, -1);

    int next_slack = first_slack, next_artificial = first_artificial;
    for (int i = 0 ; i < m ; ++i) {
        for (int j = 0 ; j < nv ; ++j)
            tab.t[i][j] = rows[i].coeffs[j];
        tab.t[i][tab.cols] = rows[i].rhs;
        if (rows[i].sense == Sense::le) {
            tab.t[i][next_slack] = 1;
            tab.basis[i] = next_slack++;
        }
        else {
            if (rows[i].sense == Sense::ge)
                tab.t[i][next_slack++] = -1;
            tab.t[i][next_artificial] = 1;
            tab.basis[i] = next_artificial++;
        }
    }

    LpSolution result;

    // phase one: maximise minus the sum of the artificials
    vector<Rational> phase_one(tab.cols);
    for (int j = first_artificial ; j < tab.cols ; ++j)
        phase_one[j] = -1;
    tab.set_objective(phase_one);
    tab.run(tab.cols);
    if (tab.value != 0) {
        result.status = LpStatus::infeasible;
        return result;
    }

    // drive zero-level artificials out of the basis, dropping redundant rows
    for (int i = 0 ; i < tab.rows ; ) {
        if (tab.basis[i] < first_artificial) {
            ++i;
            continue;
        }
        int col = -1;
        for (int j = 0 ; j < first_artificial ; ++j)
            if (tab.t[i][j] != 0) {
                col = j;
                break;
            }
        if (col >= 0) {
            tab.pivot(i, col);
            ++i;
        }
        else {
            tab.t.erase(tab.t.begin() + i);
            tab.basis.erase(tab.basis.begin() + i);
            --tab.rows;
        }
    }

    vector<Rational> phase_two(tab.cols);
    for (int j = 0 ; j < nv ; ++j)
        phase_two[j] = lp.maximize ? lp.objective[j] : Rational(-lp.objective[j]);
    tab.set_objective(phase_two);
    if (! tab.run(first_artificial)) {
        result.status = LpStatus::unbounded;
        return result;
    }

    result.status = LpStatus::optimal;
    result.values.assign(nv, 0);
    for (int i = 0 ; i < tab.rows ; ++i)
        if (tab.basis[i] < nv)
            result.values[tab.basis[i]] = tab.t[i][tab.cols];
    result.objective = 0;
    for (int j = 0 ; j < nv ; ++j)
        result.objective += lp.objective[j] * result.values[j];
    return result;
}

auto css::lp_feasible(const LinearProgram & lp, const vector<Rational> & x) -> bool
{
    if (int(x.size()) != lp.variables)
        return false;
    for (auto & v : x)
        if (v < 0)
            return false;
    for (auto & c : lp.constraints) {
        Rational lhs = 0;
        for (int j = 0 ; j < lp.variables ; ++j)
            lhs += c.coeffs[j] * x[j];
        switch (c.sense) {
            case Sense::le: if (lhs > c.rhs) return false; break;
            case Sense::ge: if (lhs < c.rhs) return false; break;
            case Sense::eq: if (lhs != c.rhs) return false; break;
        }
    }
    return true;
}
