# pylint: disable=missing-function-docstring,invalid-name
"""Events generated by the Pipeline class."""
from enum import Enum

import blinker


class EventType(Enum):
    """
    Enum of the signal names sent by a pipeline run.
    """

    STAGE_STARTED = "stage_started"
    STAGE_FINISHED = "stage_finished"
    STAGE_FAILED = "stage_failed"
    ARTIFACT_WRITTEN = "artifact_written"
    UNKNOWN = None


stage_events = [EventType.STAGE_STARTED, EventType.STAGE_FINISHED, EventType.STAGE_FAILED]
artifact_events = [EventType.ARTIFACT_WRITTEN]


class PipelineEvent:
    """
    Event class for pipeline events. This is a stub for all other events.
    """

    event_type = EventType.UNKNOWN

    def __init__(self, data):
        self._data = data

    @property
    def data(self):
        """
        Get event data.
        """
        return self._data

    def __getattr__(self, item):
        """
        Allows access to not explicitly specified attributes in event.
        :param item: Attribute name
        :type item: str
        :return: Attribute value
        """
        try:
            return self.__dict__["_data"][item]
        except KeyError as exc:
            raise AttributeError(item) from exc

    def send(self, sender):
        """
        Delivers the event synchronously to the listeners of its signal.
        """
        blinker.signal(self.event_type.name).send(sender, event=self)


class StageStartedEvent(PipelineEvent):
    """
    Event created when a stage begins.
    """

    event_type = EventType.STAGE_STARTED

    def __init__(self, stage):
        super().__init__({"stage": stage})

    @property
    def stage(self):
        return self._data["stage"]


class StageFinishedEvent(PipelineEvent):
    """
    Event created when a stage completes.
    """

    event_type = EventType.STAGE_FINISHED

    def __init__(self, stage, elapsed, summary=None):
        super().__init__({"stage": stage, "elapsed": elapsed, "summary": summary or {}})

    @property
    def stage(self):
        return self._data["stage"]

    @property
    def elapsed(self):
        """
        Wall clock seconds spent in the stage.
        """
        return self._data["elapsed"]

    @property
    def summary(self):
        return self._data["summary"]


class StageFailedEvent(PipelineEvent):
    """
    Event created when a stage raises.
    """

    event_type = EventType.STAGE_FAILED

    def __init__(self, stage, error):
        super().__init__({"stage": stage, "error": error})

    @property
    def stage(self):
        return self._data["stage"]

    @property
    def error(self):
        return self._data["error"]


class ArtifactWrittenEvent(PipelineEvent):
    """
    Event created for every artifact file written.
    """

    event_type = EventType.ARTIFACT_WRITTEN

    def __init__(self, path, rows):
        super().__init__({"path": path, "rows": rows})

    @property
    def path(self):
        return self._data["path"]

    @property
    def rows(self):
        return self._data["rows"]


def connect(event_types, listener, weak_ref=True, sender=blinker.ANY):
    """
    Connects a listener to the signals of the given event types.
    :param sender: Only deliver events sent by this object.
    :param listener: Blinker signal handler: on_event(sender, **kw), kw will contain the event
    :param weak_ref: Use weak refs for blinker, causing listeners that go out of scope to be
                     removed (breaks nested functions)
    :type event_types: list[EventType]
    :type weak_ref: bool
    """
    for event_type in event_types:
        blinker.signal(event_type.name).connect(listener, sender=sender, weak=weak_ref)


def disconnect(event_types, listener, sender=blinker.ANY):
    for event_type in event_types:
        blinker.signal(event_type.name).disconnect(listener, sender=sender)
