#!/usr/bin/python
#
# Copyright 2026, the rgit developers.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""An exact two-phase simplex over fractions with Bland's pivot rule."""

import logging

from fractions import Fraction


OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"

logger = logging.getLogger(__name__)


class Tableau(object):
  """Simplex tableau of a system in standard form: A x = b, x >= 0.

  Every row carries one basic column. Right-hand sides stay non-negative
  while the tableau is primal feasible.
  """

  def __init__(self, rows, rhs, basis):
    """Initializes a tableau.

    Args:
      rows (list[list[Fraction]]): coefficient rows, already in canonical
          form with respect to basis.
      rhs (list[Fraction]): right-hand sides.
      basis (list[int]): basic column per row.
    """
    super(Tableau, self).__init__()
    self._rows = [list(row) for row in rows]
    self._rhs = list(rhs)
    self._basis = list(basis)

  @property
  def number_of_rows(self):
    """int: number of rows left in the tableau."""
    return len(self._rows)

  def objective(self, costs):
    """Computes the objective value of the current basic solution."""
    return sum(
        (costs[column] * value
         for column, value in zip(self._basis, self._rhs)), Fraction(0))

  def pivot(self, row, column):
    """Pivots column into the basis at row.

    Args:
      row (int): leaving row.
      column (int): entering column.
    """
    logger.debug("Pivot {0:d} -> {1:d} at row {2:d}".format(
        self._basis[row], column, row))

    pivot_row = self._rows[row]
    element = pivot_row[column]
    self._rows[row] = [value / element for value in pivot_row]
    self._rhs[row] /= element
    pivot_row = self._rows[row]

    for index, other_row in enumerate(self._rows):
      if index == row:
        continue
      factor = other_row[column]
      if factor:
        self._rows[index] = [
            value - factor * pivot_value
            for value, pivot_value in zip(other_row, pivot_row)]
        self._rhs[index] -= factor * self._rhs[row]

    self._basis[row] = column

  def reduced_costs(self, costs):
    """Computes reduced costs c_j - c_B B^-1 A_j for every column."""
    reduced = list(costs)
    for column, row in zip(self._basis, self._rows):
      weight = costs[column]
      if weight:
        reduced = [
            value - weight * coefficient
            for value, coefficient in zip(reduced, row)]
    return reduced

  def minimize(self, costs, columns):
    """Runs primal simplex iterations until optimal or unbounded.

    Bland's rule: the entering column is the lowest eligible index and
    ratio ties leave through the lowest basic column, so no cycling.

    Args:
      costs (list[Fraction]): cost per column.
      columns (list[int]): columns allowed to enter the basis.

    Returns:
      str: OPTIMAL or UNBOUNDED.
    """
    while True:
      reduced = self.reduced_costs(costs)
      basic = set(self._basis)
      entering = None
      for column in columns:
        if column not in basic and reduced[column] < 0:
          entering = column
          break

      if entering is None:
        return OPTIMAL

      candidates = [
          (self._rhs[index] / row[entering], self._basis[index], index)
          for index, row in enumerate(self._rows) if row[entering] > 0]
      if not candidates:
        return UNBOUNDED

      _, _, leaving = min(candidates)
      self.pivot(leaving, entering)

  def drive_out(self, columns, allowed):
    """Pivots zero-valued basic columns out of the basis.

    Rows in which no allowed column has a nonzero coefficient are
    linearly dependent on the others and are dropped.

    Args:
      columns (set[int]): columns to remove from the basis.
      allowed (list[int]): columns that may replace them.
    """
    row = 0
    while row < len(self._rows):
      if self._basis[row] not in columns:
        row += 1
        continue

      replacement = None
      for column in allowed:
        if self._rows[row][column] != 0:
          replacement = column
          break

      if replacement is None:
        logger.debug("Dropping redundant row {0:d}".format(row))
        del self._rows[row]
        del self._rhs[row]
        del self._basis[row]
        continue

      self.pivot(row, replacement)
      row += 1

  def solution(self, number_of_columns):
    """Retrieves the basic solution restricted to the first columns."""
    values = [Fraction(0)] * number_of_columns
    for column, value in zip(self._basis, self._rhs):
      if column < number_of_columns:
        values[column] = value
    return values


def solve(rows, rhs, number_of_columns, costs=None):
  """Minimizes costs . x subject to rows . x = rhs and x >= 0.

  Args:
    rows (list[list[Fraction]]): equality rows.
    rhs (list[Fraction]): right-hand sides.
    number_of_columns (int): number of variables.
    costs (Optional[list[Fraction]]): costs, None for a pure feasibility
        problem.

  Returns:
    tuple[str, list[Fraction], Fraction]: status, solution and objective
        value. The solution and value are None unless the status is OPTIMAL.
  """
  standard_rows = []
  standard_rhs = []
  for row, value in zip(rows, rhs):
    row = [Fraction(coefficient) for coefficient in row]
    value = Fraction(value)
    if value < 0:
      row = [-coefficient for coefficient in row]
      value = -value
    standard_rows.append(row)
    standard_rhs.append(value)

  number_of_rows = len(standard_rows)
  artificial = list(range(
      number_of_columns, number_of_columns + number_of_rows))

  tableau_rows = []
  for index, row in enumerate(standard_rows):
    unit = [Fraction(0)] * number_of_rows
    unit[index] = Fraction(1)
    tableau_rows.append(row + unit)

  tableau = Tableau(tableau_rows, standard_rhs, artificial)
  phase_one_costs = (
      [Fraction(0)] * number_of_columns + [Fraction(1)] * number_of_rows)
  tableau.minimize(phase_one_costs, range(number_of_columns + number_of_rows))

  if tableau.objective(phase_one_costs) > 0:
    logger.debug("Phase one ended with positive infeasibility")
    return INFEASIBLE, None, None

  structural = list(range(number_of_columns))
  tableau.drive_out(set(artificial), structural)

  if costs is None:
    return OPTIMAL, tableau.solution(number_of_columns), Fraction(0)

  phase_two_costs = (
      [Fraction(cost) for cost in costs] + [Fraction(0)] * number_of_rows)
  status = tableau.minimize(phase_two_costs, structural)
  if status == UNBOUNDED:
    return UNBOUNDED, None, None

  return (
      OPTIMAL, tableau.solution(number_of_columns),
      tableau.objective(phase_two_costs))
