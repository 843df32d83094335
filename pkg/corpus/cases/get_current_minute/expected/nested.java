public class Wrapped {
    int minutes;

    void read(android.widget.TimePicker picker, boolean live) {
        if (live) {
            if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
                minutes = picker.getMinute();
            } else {
                minutes = picker.getCurrentMinute();
            }
        }
    }
}
