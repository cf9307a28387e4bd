"""
Per-field report for the `quad` command.
"""

import logging
from typing import Optional

from polya_groups.errors import InvariantViolation
from polya_groups.models.reports import QuadReport
from polya_groups.services.forms import class_group_definite, class_group_real, imaginary_class_number
from polya_groups.services.polya import polya_group, relative_class_group
from polya_groups.services.quadfield import make_field
from polya_groups.services.units import fundamental_unit

logger = logging.getLogger(__name__)


def quad_report(d: int, precision: Optional[int] = None) -> QuadReport:
    """
    Class group, Polya group, relative class group and (d > 0) unit data.

    Raises:
        NotFundamental: If d is not a fundamental discriminant
        InvariantViolation: If the class group disagrees with the analytic
            class number (d < 0) or with the relative class group

    Example:
        >>> r = quad_report(-84)
        >>> r.h, r.po_order, r.rel_order
        (4, 4, 1)
    """
    F = make_field(d)
    unit = None
    if d < 0:
        cl = class_group_definite(F)
        narrow_h = cl.order
        analytic = imaginary_class_number(F)
        if analytic != cl.order:
            logger.error(f"d = {d}: form class number {cl.order} != analytic {analytic}")
            raise InvariantViolation(f"d = {d}: |Cl| = {cl.order} from forms but {analytic} from the character sum")
    else:
        unit = fundamental_unit(F, precision)
        narrow, cl = class_group_real(F, unit.norm)
        narrow_h = narrow.order

    po = polya_group(F)
    rel = relative_class_group(F)
    if rel.class_number != cl.order:
        raise InvariantViolation(f"d = {d}: |Cl| = {cl.order} but the quotient was taken in a group of order {rel.class_number}")

    report = QuadReport(
        d=d,
        h=cl.order,
        cl_structure=cl.structure,
        s=F.s,
        po_order=po.order,
        po_structure=po.group.structure,
        rel_order=rel.order,
        rel_structure=rel.group.structure,
        narrow_h=narrow_h,
        unit=str(unit) if unit else None,
        unit_norm=unit.norm if unit else None,
        regulator=float(unit.regulator) if unit else None,
    )
    logger.info(f"quad d={d}: h={report.h} {report.cl_structure}, |Po|={report.po_order}, |Cl/Po|={report.rel_order}")
    return report
