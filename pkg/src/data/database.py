"""
Database models for generated proofs and size measurements
Uses SQLAlchemy; the default backend is a local SQLite file
"""

from sqlalchemy import create_engine, Column, Integer, String, Float, DateTime, Boolean, Index
from sqlalchemy.orm import declarative_base, sessionmaker, Session
from datetime import datetime
from typing import List, Optional
import hashlib
import logging
import uuid
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import DATABASE_URL, COUNTING_CONVENTION_ID

logger = logging.getLogger(__name__)

# ============================================================================
# SQLALCHEMY SETUP
# ============================================================================

Base = declarative_base()

# pool_pre_ping=True reconnects after a dropped connection
engine = create_engine(
    DATABASE_URL,
    echo=False,
    pool_pre_ping=True
)

SessionLocal = sessionmaker(bind=engine, autocommit=False, autoflush=False)

# ============================================================================
# MODELS
# ============================================================================

class ProofRecord(Base):
    """
    One generated Hilbert proof
    The proof text itself is not stored, only its digest and sizes
    """
    __tablename__ = 'proof_records'

    id = Column(Integer, primary_key=True, autoincrement=True)

    kind = Column(String(20), nullable=False, index=True)  # ti, feps
    n = Column(Integer, nullable=False)
    counting_mode = Column(String(20), nullable=False)      # normative, raw

    proof_length = Column(Integer, nullable=False)
    line_count = Column(Integer, nullable=False)
    sha256 = Column(String(64), nullable=False, index=True)
    accepted = Column(Boolean, nullable=False)

    created_at = Column(DateTime, default=datetime.utcnow)

    __table_args__ = (
        Index('idx_kind_n', 'kind', 'n'),
    )


class SizeMeasurement(Base):
    """One row of a measure run; rows of a run share run_id"""
    __tablename__ = 'size_measurements'

    id = Column(Integer, primary_key=True, autoincrement=True)
    run_id = Column(String(36), nullable=False, index=True)

    kind = Column(String(20), nullable=False)
    n = Column(Integer, nullable=False)
    proof_length = Column(Integer, nullable=False)
    check_seconds = Column(Float, nullable=False)
    counting_convention = Column(String(50), nullable=False, default=COUNTING_CONVENTION_ID)

    created_at = Column(DateTime, default=datetime.utcnow)


# ============================================================================
# HELPERS
# ============================================================================

def create_tables(bind=None):
    """Create all tables that do not exist yet"""
    Base.metadata.create_all(bind=bind or engine)


def get_session() -> Session:
    """
    New session on the configured engine
    Callers must close it
    """
    return SessionLocal()


def drop_all_tables(bind=None):
    """
    Drop every table
    Development and tests only
    """
    Base.metadata.drop_all(bind=bind or engine)


def proof_digest(text: str) -> str:
    return hashlib.sha256(text.encode('utf-8')).hexdigest()


def save_proof_record(session: Session, kind: str, n: int, counting_mode: str,
                      proof_length: int, line_count: int, text: str,
                      accepted: bool) -> ProofRecord:
    """
    Store one generated proof

    Args:
        session: open session; committed here
        kind: generator name
        n: generator parameter
        counting_mode: symbol counting mode of proof_length
        proof_length: symbol count
        line_count: number of proof lines
        text: rendered proof, hashed
        accepted: checker verdict

    Returns:
        The stored ProofRecord
    """
    record = ProofRecord(
        kind=kind,
        n=n,
        counting_mode=counting_mode,
        proof_length=proof_length,
        line_count=line_count,
        sha256=proof_digest(text),
        accepted=accepted,
    )
    session.add(record)
    session.commit()
    logger.info("Saved %s proof for n=%d (%d symbols)", kind, n, proof_length)
    return record


def save_size_report(session: Session, report, run_id: Optional[str] = None) -> str:
    """
    Store every row of a SizeReport under one run id

    Returns:
        The run id
    """
    run_id = run_id or str(uuid.uuid4())
    try:
        for row in report.rows:
            session.add(SizeMeasurement(
                run_id=run_id,
                kind=report.kind,
                n=row.n,
                proof_length=row.proof_length,
                check_seconds=row.check_seconds,
                counting_convention=COUNTING_CONVENTION_ID,
            ))
        session.commit()
    except Exception:
        session.rollback()
        raise
    logger.info("Saved %d measurements under run %s", len(report.rows), run_id)
    return run_id


def measurements_for_run(session: Session, run_id: str) -> List[SizeMeasurement]:
    return (session.query(SizeMeasurement)
            .filter_by(run_id=run_id)
            .order_by(SizeMeasurement.n)
            .all())


def latest_proof(session: Session, kind: str, n: int) -> Optional[ProofRecord]:
    return (session.query(ProofRecord)
            .filter_by(kind=kind, n=n)
            .order_by(ProofRecord.id.desc())
            .first())
