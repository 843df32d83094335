public class Wrapped {
    int minutes;

    void read(android.widget.TimePicker picker, boolean live) {
        if (live) {
            minutes = picker.getCurrentMinute();
        }
    }
}
